#include "twlga/task_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "twlga/error.hpp"

namespace twlga {

namespace {

void check_fraction(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(std::string("usage.") + name + " must lie in [0, 1], got " +
                              std::to_string(v));
    }
}

}  // namespace

void ResourceUsage::validate() const {
    check_fraction(cpu, "cpu");
    check_fraction(mem, "mem");
    check_fraction(disk, "disk");
    check_fraction(net, "net");
}

void WorkloadWeights::validate() const {
    for (double w : {cpu, mem, disk, net}) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw InvalidArgument("workload weights must be finite and non-negative");
        }
    }
    const double sum = cpu + mem + disk + net;
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw InvalidArgument("workload weights must sum to 1, got " + std::to_string(sum));
    }
}

double node_workload(const ResourceUsage& usage, const WorkloadWeights& weights) {
    usage.validate();
    weights.validate();
    const double w = weights.cpu * usage.cpu + weights.mem * usage.mem +
                     weights.disk * usage.disk + weights.net * usage.net;
    // The weight tolerance can push the sum a hair past the unit interval.
    return std::clamp(w, 0.0, 1.0);
}

void TaskSet::validate() const {
    if (count < 1) throw InvalidArgument("task count must be at least 1");
    if (sizes_mb) {
        if (sizes_mb->size() != count) {
            throw InvalidArgument("task sizes: expected " + std::to_string(count) +
                                  " entries, got " + std::to_string(sizes_mb->size()));
        }
        for (double s : *sizes_mb) {
            if (!(s > 0.0) || !std::isfinite(s)) {
                throw InvalidArgument("task sizes must be positive and finite");
            }
        }
    }
}

void NodeSet::validate() const {
    if (count < 1) throw InvalidArgument("node count must be at least 1");
    if (usage.size() != count) {
        throw InvalidArgument("node usage: expected " + std::to_string(count) +
                              " entries, got " + std::to_string(usage.size()));
    }
    for (const auto& u : usage) u.validate();
}

EtcMatrix::EtcMatrix(std::size_t n_tasks, std::size_t n_nodes, std::vector<double> entries)
    : n_tasks_(n_tasks), n_nodes_(n_nodes), entries_(std::move(entries)) {
    if (n_tasks_ < 1 || n_nodes_ < 1) {
        throw InvalidArgument("ETC matrix needs at least one task and one node");
    }
    if (entries_.size() != n_tasks_ * n_nodes_) {
        throw InvalidArgument("ETC matrix: expected " + std::to_string(n_tasks_ * n_nodes_) +
                              " entries, got " + std::to_string(entries_.size()));
    }
    for (double e : entries_) {
        if (!(e > 0.0) || !std::isfinite(e)) {
            throw InvalidArgument("ETC entries must be positive and finite");
        }
    }
}

EtcMatrix::EtcMatrix(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty()) {
        throw InvalidArgument("ETC matrix needs at least one task and one node");
    }
    std::vector<double> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw InvalidArgument("ETC matrix rows are ragged");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    *this = EtcMatrix(rows.size(), rows.front().size(), std::move(flat));
}

double EtcMatrix::at(std::size_t task, std::size_t node) const {
    if (task >= n_tasks_ || node >= n_nodes_) {
        throw InvalidArgument("ETC index (" + std::to_string(task) + ", " + std::to_string(node) +
                              ") out of range");
    }
    return (*this)(task, node);
}

EtcMatrix EtcMatrix::scaled(double k) const {
    std::vector<double> out(entries_);
    for (double& e : out) e *= k;
    return EtcMatrix(n_tasks_, n_nodes_, std::move(out));
}

std::vector<double> Instance::workloads() const {
    std::vector<double> out(nodes.count);
    for (std::size_t i = 0; i < nodes.count; ++i) out[i] = workload(i);
    return out;
}

void Instance::validate() const {
    tasks.validate();
    nodes.validate();
    weights.validate();
    if (etc.tasks() != tasks.count || etc.nodes() != nodes.count) {
        throw InvalidArgument("ETC matrix is " + std::to_string(etc.tasks()) + "x" +
                              std::to_string(etc.nodes()) + " but instance has " +
                              std::to_string(tasks.count) + " tasks and " +
                              std::to_string(nodes.count) + " nodes");
    }
}

Instance generate_instance(std::size_t n_tasks, std::size_t n_nodes, double heterogeneity,
                           std::uint64_t seed) {
    if (n_tasks < 1 || n_nodes < 1) {
        throw InvalidArgument("generate_instance: dimensions must be positive");
    }
    if (!(heterogeneity >= 1.0) || !std::isfinite(heterogeneity)) {
        throw InvalidArgument("generate_instance: heterogeneity must be >= 1");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> base_dist(1.0, 100.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> base(n_tasks);
    for (double& b : base) b = base_dist(rng);

    std::vector<double> speed(n_nodes, 1.0);
    if (heterogeneity > 1.0) {
        std::uniform_real_distribution<double> speed_dist(1.0, heterogeneity);
        for (double& s : speed) s = speed_dist(rng);
    }

    std::vector<ResourceUsage> usage(n_nodes);
    for (auto& u : usage) {
        u.cpu = unit(rng);
        u.mem = unit(rng);
        u.disk = unit(rng);
        u.net = unit(rng);
    }

    std::vector<double> entries(n_tasks * n_nodes);
    for (std::size_t t = 0; t < n_tasks; ++t) {
        for (std::size_t r = 0; r < n_nodes; ++r) entries[t * n_nodes + r] = base[t] * speed[r];
    }

    Instance inst;
    inst.tasks = TaskSet{n_tasks, base};
    inst.nodes = NodeSet{n_nodes, std::move(usage)};
    inst.etc = EtcMatrix(n_tasks, n_nodes, std::move(entries));
    return inst;
}

}  // namespace twlga
