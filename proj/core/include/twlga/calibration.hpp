#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "twlga/cluster_sim.hpp"

namespace twlga {

struct Observation {
    double size_mb = 0.0;
    std::size_t nodes = 0;
    double makespan_s = 0.0;
};

/// Wall-clock MapReduce job times for 160 MB to 2.6 GB inputs on 1, 2 and 3
/// nodes of a small Hadoop cluster. Sizes are listed in MB (1.3 GB = 1300).
inline constexpr std::array<double, 5> kReferenceSizesMb{160, 320, 640, 1300, 2600};
inline constexpr std::array<std::size_t, 3> kReferenceNodeCounts{1, 2, 3};
inline constexpr std::array<std::array<double, 5>, 3> kReferenceMakespans{{
    {29, 64, 408, 548, 1213},   // 1 node
    {38, 90, 359, 487, 1054},   // 2 nodes
    {55, 116, 352, 453, 901},   // 3 nodes
}};

/// The 15 reference observations, size-major.
std::vector<Observation> reference_observations();

struct CalibrationOptions {
    std::size_t max_sweeps = 200'000;
    double tolerance = 1e-14;  ///< relative parameter change that ends the descent
};

struct CalibrationReport {
    OverheadModel model;
    double residual = 0.0;  ///< sum of squared makespan residuals
    std::size_t sweeps = 0;
};

/// Least-squares fit of the four overhead parameters. The makespan is linear in
/// (startup, coordination, 1/transfer_rate, 1/compute_rate), so the fit runs
/// non-negative coordinate descent on those costs starting from `start`,
/// sweeping coordinates in a fixed order, and finishes with an exact solve on
/// the active set. Deterministic. Throws IllPosed for fewer than four
/// observations or when the observations cannot separate the parameters.
CalibrationReport calibrate(const OverheadModel& start, std::span<const Observation> observations,
                            const CalibrationOptions& options = {});

/// Sum of squared residuals of `model` over `observations`.
double sum_squared_residuals(const OverheadModel& model, std::span<const Observation> observations);

/// Whether the simulated makespans order node counts the same way as the
/// observations within each size. Returns one verdict per distinct size, in
/// order of first appearance.
struct OrderingVerdict {
    double size_mb = 0.0;
    bool matches = false;
};
std::vector<OrderingVerdict> compare_orderings(const OverheadModel& model,
                                               std::span<const Observation> observations);

}  // namespace twlga
