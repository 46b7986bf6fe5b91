#include "twlga/chromosome.hpp"

#include <algorithm>
#include <string>

#include "twlga/error.hpp"

namespace twlga {

void Chromosome::validate(std::size_t n_tasks, std::size_t n_nodes) const {
    if (genes.size() != n_tasks) {
        throw InvalidArgument("chromosome has " + std::to_string(genes.size()) +
                              " genes, instance has " + std::to_string(n_tasks) + " tasks");
    }
    for (std::size_t j = 0; j < genes.size(); ++j) {
        if (genes[j] < 1 || genes[j] > n_nodes) {
            throw CorruptChromosome("gene " + std::to_string(j + 1) + " = " +
                                    std::to_string(genes[j]) + " outside [1, " +
                                    std::to_string(n_nodes) + "]");
        }
    }
}

std::size_t Assignment::n_tasks() const noexcept {
    std::size_t n = 0;
    for (const auto& l : tasks_of) n += l.size();
    return n;
}

std::size_t Assignment::active_nodes() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(tasks_of.begin(), tasks_of.end(), [](const auto& l) { return !l.empty(); }));
}

Chromosome random_chromosome(std::size_t n_tasks, std::size_t n_nodes, Rng& rng) {
    if (n_tasks < 1 || n_nodes < 1) {
        throw InvalidArgument("random_chromosome: dimensions must be positive");
    }
    std::uniform_int_distribution<Gene> pick(1, static_cast<Gene>(n_nodes));
    Chromosome c;
    c.genes.resize(n_tasks);
    for (auto& g : c.genes) g = pick(rng);
    return c;
}

Assignment decode(const Chromosome& c, std::size_t n_nodes) {
    c.validate(c.size(), n_nodes);
    Assignment a;
    a.tasks_of.resize(n_nodes);
    for (std::size_t j = 0; j < c.size(); ++j) a.tasks_of[c.node_of(j)].push_back(j);
    return a;
}

Chromosome encode(const Assignment& a) {
    const std::size_t n = a.n_tasks();
    Chromosome c;
    c.genes.assign(n, 0);
    for (std::size_t i = 0; i < a.tasks_of.size(); ++i) {
        for (std::size_t t : a.tasks_of[i]) {
            if (t >= n || c.genes[t] != 0) {
                throw InvalidArgument("assignment lists do not partition the task set");
            }
            c.genes[t] = static_cast<Gene>(i + 1);
        }
    }
    return c;
}

std::vector<double> each_resource_time(const Assignment& a, const EtcMatrix& etc) {
    if (a.n_nodes() != etc.nodes() || a.n_tasks() != etc.tasks()) {
        throw InvalidArgument("assignment does not match ETC dimensions");
    }
    std::vector<double> out(a.n_nodes(), 0.0);
    for (std::size_t i = 0; i < a.n_nodes(); ++i) {
        for (std::size_t t : a.tasks_of[i]) {
            if (t >= etc.tasks()) throw InvalidArgument("assignment names an unknown task");
            out[i] += etc(t, i);
        }
    }
    return out;
}

std::vector<double> each_resource_time(const Chromosome& c, const EtcMatrix& etc) {
    c.validate(etc.tasks(), etc.nodes());
    std::vector<double> out(etc.nodes(), 0.0);
    // Accumulate in ascending task order so the result matches the Assignment overload bit for bit.
    for (std::size_t j = 0; j < c.size(); ++j) out[c.node_of(j)] += etc(j, c.node_of(j));
    return out;
}

std::size_t bottleneck_node(const std::vector<double>& per_node_time) {
    if (per_node_time.empty()) throw InvalidArgument("bottleneck_node: no nodes");
    return static_cast<std::size_t>(std::max_element(per_node_time.begin(), per_node_time.end()) -
                                    per_node_time.begin());
}

double job_final_time(const Assignment& a, const EtcMatrix& etc) {
    const auto times = each_resource_time(a, etc);
    return times[bottleneck_node(times)];
}

double job_final_time(const Chromosome& c, const EtcMatrix& etc) {
    const auto times = each_resource_time(c, etc);
    return times[bottleneck_node(times)];
}

}  // namespace twlga
