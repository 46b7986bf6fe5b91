#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "twlga/chromosome.hpp"
#include "twlga/task_model.hpp"

namespace twlga {

enum class FitnessMode {
    TimeOnly,  ///< 1 / makespan
    Twlga,     ///< 1 / (makespan * (1 + workload of the bottleneck node))
};

std::string_view to_string(FitnessMode mode) noexcept;
/// Accepts "time-only"/"time_only"/"TimeOnly" and "twlga"/"TWLGA".
FitnessMode parse_fitness_mode(std::string_view text);

struct FitnessReport {
    std::vector<double> each_resource_time;  ///< seconds, per node
    double job_final_time = 0.0;             ///< seconds
    double p_time = 0.0;                     ///< 1 / job_final_time
    double optimum = 0.0;                    ///< the value the GA maximizes
    std::size_t bottleneck_node = 0;         ///< 0-based
    double bottleneck_workload = 0.0;
};

FitnessReport fitness(const Chromosome& c, const Instance& inst, FitnessMode mode);

/// Fitness from precomputed per-node workloads; skips re-validating the
/// instance. `workloads` must have one entry per node.
FitnessReport fitness(const Chromosome& c, const EtcMatrix& etc, const std::vector<double>& workloads,
                      FitnessMode mode);

}  // namespace twlga
