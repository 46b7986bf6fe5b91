#include "twlga/adaptive_rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "twlga/error.hpp"

namespace twlga {

namespace {

constexpr double kRelativeSpreadFloor = 1e-12;

void check_band(double p1, double p2, const char* name) {
    if (!(p1 > 0.0)) throw InvalidParams(std::string(name) + "1 must be positive");
    if (!(p2 >= 0.0 && p2 <= p1 && p1 <= 1.0)) {
        throw InvalidParams(std::string("require 0 <= ") + name + "2 <= " + name + "1 <= 1");
    }
}

}  // namespace

std::string_view to_string(RateForm form) noexcept {
    return form == RateForm::Scaled ? "scaled" : "interpolated";
}

RateForm parse_rate_form(std::string_view text) {
    if (text == "scaled") return RateForm::Scaled;
    if (text == "interpolated") return RateForm::Interpolated;
    throw InvalidParams("unknown rate form '" + std::string(text) + "'");
}

void GaParams::validate() const {
    if (population < 2) throw InvalidParams("population must be at least 2");
    if (elitism >= population) throw InvalidParams("elitism must be smaller than population");
    if (tournament_size < 1) throw InvalidParams("tournament_size must be at least 1");
    if (!(p_c2 >= 0.0 && p_c2 <= p_c1 && p_c1 <= 1.0)) {
        throw InvalidParams("require 0 <= p_c2 <= p_c1 <= 1");
    }
    if (!(p_m2 >= 0.0 && p_m2 <= p_m1 && p_m1 <= 1.0)) {
        throw InvalidParams("require 0 <= p_m2 <= p_m1 <= 1");
    }
}

PopulationStats PopulationStats::of(std::span<const double> fitness) {
    if (fitness.empty()) throw InvalidArgument("population statistics of an empty population");
    PopulationStats s;
    s.f_max = *std::max_element(fitness.begin(), fitness.end());
    double sum = 0.0;
    for (double f : fitness) sum += f;
    // Rounding can leave the mean a few ulps above the max for uniform populations.
    s.f_mean = std::min(sum / static_cast<double>(fitness.size()), s.f_max);
    return s;
}

bool PopulationStats::degenerate() const noexcept {
    return f_max - f_mean <= kRelativeSpreadFloor * std::abs(f_max);
}

void PopulationStats::validate() const {
    if (!std::isfinite(f_max) || !std::isfinite(f_mean) || !(f_mean > 0.0)) {
        throw InvalidArgument("population statistics must be finite and positive");
    }
    if (f_max < f_mean) throw InvalidArgument("population maximum below its mean");
}

double raw_adaptive_rate(const PopulationStats& stats, double f, double p1, double p2, RateForm form) {
    const double spread = (stats.f_max - f) / (stats.f_max - stats.f_mean);
    if (form == RateForm::Scaled) return (p1 - p2) / p1 * spread;
    // (f - mean) / (f0 - mean) == 1 - spread
    return p1 - (p1 - p2) * (1.0 - spread);
}

double adaptive_rate(const PopulationStats& stats, double f, double p1, double p2, RateForm form) {
    stats.validate();
    if (!(p1 > 0.0)) throw InvalidParams("upper rate bound must be positive");
    if (stats.degenerate() || f < stats.f_mean) return p1;
    return std::clamp(raw_adaptive_rate(stats, f, p1, p2, form), p2, p1);
}

double adaptive_crossover_rate(const PopulationStats& stats, double f_prime, const GaParams& params) {
    check_band(params.p_c1, params.p_c2, "p_c");
    return adaptive_rate(stats, f_prime, params.p_c1, params.p_c2, params.rate_form);
}

double adaptive_mutation_rate(const PopulationStats& stats, double f, const GaParams& params) {
    check_band(params.p_m1, params.p_m2, "p_m");
    return adaptive_rate(stats, f, params.p_m1, params.p_m2, params.rate_form);
}

}  // namespace twlga
