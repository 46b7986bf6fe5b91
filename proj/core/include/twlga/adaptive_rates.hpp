#pragma once

#include <span>

#include "twlga/ga_params.hpp"

namespace twlga {

struct PopulationStats {
    double f_max = 0.0;   ///< best fitness in the population
    double f_mean = 0.0;  ///< average fitness

    static PopulationStats of(std::span<const double> fitness);

    /// True when the population carries no fitness spread to scale against.
    bool degenerate() const noexcept;
    void validate() const;
};

/// Unclamped rate for an individual of fitness `f` at or above the mean.
/// Precondition: stats not degenerate, p1 > 0.
double raw_adaptive_rate(const PopulationStats& stats, double f, double p1, double p2, RateForm form);

/// Rate in [p2, p1]. Below-mean individuals and degenerate populations get p1;
/// fitness above f_max (possible for freshly bred children) gets p2.
double adaptive_rate(const PopulationStats& stats, double f, double p1, double p2, RateForm form);

/// Crossover probability for a pair whose fitter parent has fitness `f_prime`.
double adaptive_crossover_rate(const PopulationStats& stats, double f_prime, const GaParams& params);

/// Mutation probability for the individual about to be mutated, of fitness `f`.
double adaptive_mutation_rate(const PopulationStats& stats, double f, const GaParams& params);

}  // namespace twlga
