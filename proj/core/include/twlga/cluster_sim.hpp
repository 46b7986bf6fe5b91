#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "twlga/chromosome.hpp"
#include "twlga/task_model.hpp"

namespace twlga {

/// Cost model for running a batch of tasks on k participating nodes.
///
/// A node with work pays `startup`, then `coordination` for every pair of
/// participating nodes (k(k-1)/2 pairs), then for each of its tasks a transfer
/// and a compute phase. Task inputs are striped over the participating nodes,
/// so a fraction (k-1)/k of every input is remote:
///
///   completion_i = startup + coordination * k(k-1)/2
///                + sum_{j in M_i} size_j * ((k-1)/k / transfer_rate + 1 / compute_rate)
///
/// transfer_rate may be +infinity to switch transfers off.
struct OverheadModel {
    double startup = 0.0;        ///< seconds per node
    double coordination = 0.0;   ///< seconds per pair of participating nodes
    double transfer_rate = std::numeric_limits<double>::infinity();  ///< MB/s for remote input
    double compute_rate = 1.0;   ///< MB/s of processing per node

    void validate() const;

    /// Closed-form makespan of `size_mb` split evenly over `nodes` nodes.
    double even_split_makespan(double size_mb, std::size_t nodes) const;

    bool operator==(const OverheadModel&) const = default;
};

enum class Phase { Startup, Coordination, Transfer, Compute };

struct BusyInterval {
    double start = 0.0;
    double end = 0.0;
    Phase phase = Phase::Startup;
    std::size_t task = 0;  ///< meaningful for Transfer and Compute only
};

struct SimBreakdown {
    double compute = 0.0;
    double transfer = 0.0;
    double overhead = 0.0;  ///< startup plus coordination

    double total() const noexcept { return compute + transfer + overhead; }
};

struct SimResult {
    std::vector<std::vector<BusyInterval>> busy;  ///< per node, in time order
    std::vector<double> completion;               ///< per node; 0 for idle nodes
    double makespan = 0.0;
    SimBreakdown breakdown;                       ///< summed over all nodes

    double busy_time() const noexcept;
};

/// Discrete-event run of `a` with per-task input sizes in MB.
SimResult simulate(const Assignment& a, std::span<const double> sizes_mb, const OverheadModel& model);

/// Uses inst.tasks.sizes_mb; throws InvalidArgument when the instance has none.
SimResult simulate(const Assignment& a, const Instance& inst, const OverheadModel& model);

struct ScalingPoint {
    double size_mb = 0.0;
    std::size_t nodes = 0;
    double makespan = 0.0;

    bool operator==(const ScalingPoint&) const = default;
};

/// For every (size, node count) pair, splits the data into one equal task per
/// node and simulates. Rows are ordered by size, then by node count, as given.
std::vector<ScalingPoint> scaling_experiment(std::span<const double> sizes_mb,
                                             std::span<const std::size_t> node_counts,
                                             const OverheadModel& model);

}  // namespace twlga
