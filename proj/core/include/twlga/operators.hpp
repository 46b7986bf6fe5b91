#pragma once

#include <cstddef>
#include <utility>

#include "twlga/chromosome.hpp"

namespace twlga {

/// Single-point crossover with the cut drawn uniformly from [1, N-1]. For N = 1
/// the parents come back unchanged and no random number is consumed.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

/// Children take a's genes before `cut` and b's from `cut` on (and vice versa).
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut);

/// Reassigns one uniformly chosen gene to a uniformly chosen node in [1, n_nodes];
/// the new value may equal the old one.
Chromosome mutate(const Chromosome& c, std::size_t n_nodes, Rng& rng);

}  // namespace twlga
