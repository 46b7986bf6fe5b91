#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace twlga {

/// Utilization of the four resources that make up a node's workload.
/// Every field is a fraction in [0, 1].
struct ResourceUsage {
    double cpu = 0.0;
    double mem = 0.0;
    double disk = 0.0;
    double net = 0.0;

    void validate() const;

    bool operator==(const ResourceUsage&) const = default;
};

/// Share of each resource in overall node performance. Non-negative and
/// summing to one. The defaults are arbitrary; nothing in the model fixes them.
struct WorkloadWeights {
    double cpu = 0.4;
    double mem = 0.3;
    double disk = 0.2;
    double net = 0.1;

    static constexpr double kSumTolerance = 1e-9;

    void validate() const;

    bool operator==(const WorkloadWeights&) const = default;
};

/// Weighted utilization of a node, in [0, 1].
double node_workload(const ResourceUsage& usage, const WorkloadWeights& weights);

struct TaskSet {
    std::size_t count = 0;
    /// Nominal input size per task in megabytes. Only the cluster simulator reads it.
    std::optional<std::vector<double>> sizes_mb;

    void validate() const;

    bool operator==(const TaskSet&) const = default;
};

struct NodeSet {
    std::size_t count = 0;
    std::vector<ResourceUsage> usage;

    void validate() const;

    bool operator==(const NodeSet&) const = default;
};

/// Expected time to complete each (task, node) pair, in seconds.
/// Stored row-major with tasks as rows and nodes as columns; indices are 0-based.
class EtcMatrix {
public:
    EtcMatrix() = default;
    EtcMatrix(std::size_t n_tasks, std::size_t n_nodes, std::vector<double> entries);
    EtcMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t tasks() const noexcept { return n_tasks_; }
    std::size_t nodes() const noexcept { return n_nodes_; }

    double operator()(std::size_t task, std::size_t node) const noexcept {
        return entries_[task * n_nodes_ + node];
    }
    double at(std::size_t task, std::size_t node) const;

    std::span<const double> row(std::size_t task) const noexcept {
        return {entries_.data() + task * n_nodes_, n_nodes_};
    }
    std::span<const double> data() const noexcept { return entries_; }

    /// Copy with every entry multiplied by `k` (> 0).
    EtcMatrix scaled(double k) const;

    bool operator==(const EtcMatrix&) const = default;

private:
    std::size_t n_tasks_ = 0;
    std::size_t n_nodes_ = 0;
    std::vector<double> entries_;
};

struct Instance {
    TaskSet tasks;
    NodeSet nodes;
    EtcMatrix etc;
    WorkloadWeights weights;

    std::size_t n_tasks() const noexcept { return tasks.count; }
    std::size_t n_nodes() const noexcept { return nodes.count; }

    /// Workload of node `node` (0-based) under this instance's weights.
    double workload(std::size_t node) const { return node_workload(nodes.usage.at(node), weights); }
    std::vector<double> workloads() const;

    /// Throws InvalidArgument unless every component is valid and dimensions agree.
    void validate() const;

    bool operator==(const Instance&) const = default;
};

/// Synthetic instance: etc(t, r) = base_t * speed_r with base_t ~ U[1, 100]
/// and speed_r ~ U[1, heterogeneity]; usages ~ U[0, 1]. Task sizes equal the
/// base times (one megabyte per second of reference work). Pure in its arguments.
Instance generate_instance(std::size_t n_tasks, std::size_t n_nodes, double heterogeneity,
                           std::uint64_t seed);

}  // namespace twlga
