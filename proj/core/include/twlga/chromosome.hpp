#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "twlga/task_model.hpp"

namespace twlga {

using Rng = std::mt19937_64;
using Gene = std::uint32_t;

/// Indirect task-to-resource encoding: genes[j] in [1, R] is the node that
/// runs task j. Node ids in genes are 1-based; everything else is 0-based.
struct Chromosome {
    std::vector<Gene> genes;

    std::size_t size() const noexcept { return genes.size(); }
    /// 0-based node index of task j.
    std::size_t node_of(std::size_t task) const noexcept { return genes[task] - 1; }

    /// Throws CorruptChromosome on a gene outside [1, n_nodes] and
    /// InvalidArgument on a length mismatch.
    void validate(std::size_t n_tasks, std::size_t n_nodes) const;

    auto operator<=>(const Chromosome&) const = default;
};

/// Decoded task-resource table: tasks_of[i] lists, in ascending order, the
/// 0-based task indices assigned to node i. The lists partition the task set.
struct Assignment {
    std::vector<std::vector<std::size_t>> tasks_of;

    std::size_t n_nodes() const noexcept { return tasks_of.size(); }
    std::size_t n_tasks() const noexcept;
    /// Number of nodes with at least one task.
    std::size_t active_nodes() const noexcept;

    bool operator==(const Assignment&) const = default;
};

Chromosome random_chromosome(std::size_t n_tasks, std::size_t n_nodes, Rng& rng);

Assignment decode(const Chromosome& c, std::size_t n_nodes);
Chromosome encode(const Assignment& a);

/// Per-node total of ETC entries over its assigned tasks; 0 for an idle node.
std::vector<double> each_resource_time(const Assignment& a, const EtcMatrix& etc);
/// Same quantity straight from the gene string, without building the table.
std::vector<double> each_resource_time(const Chromosome& c, const EtcMatrix& etc);

/// Makespan: the largest per-node time.
double job_final_time(const Assignment& a, const EtcMatrix& etc);
double job_final_time(const Chromosome& c, const EtcMatrix& etc);

/// Index of the first node attaining the maximum (ties go to the lowest index).
std::size_t bottleneck_node(const std::vector<double>& per_node_time);

}  // namespace twlga
