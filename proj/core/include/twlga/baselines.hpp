#pragma once

#include <cstdint>

#include "twlga/chromosome.hpp"
#include "twlga/task_model.hpp"

namespace twlga {

/// Queue-order greedy: tasks in index order, each to the node that would
/// finish it earliest given the work already queued there (lowest index on ties).
Chromosome schedule_fifo(const Instance& inst);

/// Task j goes to node (j mod R) + 1.
Chromosome schedule_round_robin(const Instance& inst);

/// Uniformly random assignment drawn from `seed`.
Chromosome schedule_random(const Instance& inst, std::uint64_t seed);

struct OptimumResult {
    Chromosome chromosome;
    double makespan = 0.0;
};

inline constexpr std::uint64_t kBruteForceGuard = 10'000'000;

/// R^N, saturating at UINT64_MAX.
std::uint64_t search_space_size(std::size_t n_tasks, std::size_t n_nodes) noexcept;

/// Exhaustive minimum-makespan assignment. Ties resolve to the lexicographically
/// smallest gene string. Throws TooLarge when R^N exceeds `guard`.
OptimumResult brute_force_optimum(const Instance& inst, std::uint64_t guard = kBruteForceGuard);

}  // namespace twlga
