#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "twlga/adaptive_rates.hpp"
#include "twlga/chromosome.hpp"
#include "twlga/fitness.hpp"
#include "twlga/ga_params.hpp"
#include "twlga/task_model.hpp"

namespace twlga {

struct GenerationRecord {
    std::size_t generation = 0;  ///< 0 is the random initial population
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double best_makespan = 0.0;  ///< makespan of the population's fittest member
    double mean_crossover_rate = 0.0;  ///< averaged over pairs bred into this generation
    double mean_mutation_rate = 0.0;   ///< averaged over children bred into this generation
};

struct EvolutionTrace {
    std::vector<GenerationRecord> generations;
    Chromosome best;       ///< fittest chromosome seen in any generation
    FitnessReport best_report;
};

/// Generational GA: elitism, tournament selection, single-point crossover and
/// single-gene mutation, both applied with adaptive probabilities. Reproducible
/// bit for bit from params.seed.
EvolutionTrace evolve(const Instance& inst, const GaParams& params);

/// CSV with header `generation,best_fitness,mean_fitness,best_makespan`.
void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

}  // namespace twlga
