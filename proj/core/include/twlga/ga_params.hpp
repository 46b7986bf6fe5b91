#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "twlga/fitness.hpp"

namespace twlga {

/// Shape of the adaptive rate curve for above-average individuals.
enum class RateForm {
    /// ((p1 - p2) / p1) * (f0 - f) / (f0 - mean), then clamped into [p2, p1].
    Scaled,
    /// p1 - (p1 - p2) * (f - mean) / (f0 - mean): the usual linear interpolation.
    Interpolated,
};

std::string_view to_string(RateForm form) noexcept;
RateForm parse_rate_form(std::string_view text);

struct GaParams {
    std::size_t population = 30;
    std::size_t generations = 100;
    double p_c1 = 0.9;
    double p_c2 = 0.6;
    double p_m1 = 0.1;
    double p_m2 = 0.01;
    std::size_t elitism = 1;
    std::size_t tournament_size = 2;
    FitnessMode fitness_mode = FitnessMode::Twlga;
    RateForm rate_form = RateForm::Scaled;
    std::uint64_t seed = 0;

    /// Throws InvalidParams naming the offending field.
    void validate() const;
};

}  // namespace twlga
