#include "twlga/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "twlga/error.hpp"

namespace twlga {

namespace {

constexpr std::size_t kParams = 4;
using Vec = std::array<double, kParams>;

Vec features(const Observation& o) {
    const double k = static_cast<double>(o.nodes);
    return {1.0, 0.5 * k * (k - 1.0), o.size_mb * (k - 1.0) / (k * k), o.size_mb / k};
}

Vec costs_of(const OverheadModel& m) {
    return {m.startup, m.coordination, std::isinf(m.transfer_rate) ? 0.0 : 1.0 / m.transfer_rate,
            std::isinf(m.compute_rate) ? 0.0 : 1.0 / m.compute_rate};
}

OverheadModel model_of(const Vec& c) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {c[0], c[1], c[2] > 0.0 ? 1.0 / c[2] : inf, c[3] > 0.0 ? 1.0 / c[3] : inf};
}

// Solves the square system in place by Gaussian elimination with partial
// pivoting. Returns false if a pivot falls below `eps`.
bool solve(std::vector<std::vector<double>> a, std::vector<double>& b, double eps) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < eps) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        for (std::size_t c = col + 1; c < n; ++c) b[col] -= a[col][c] * b[c];
        b[col] /= a[col][col];
    }
    return true;
}

}  // namespace

std::vector<Observation> reference_observations() {
    std::vector<Observation> out;
    for (std::size_t s = 0; s < kReferenceSizesMb.size(); ++s) {
        for (std::size_t k = 0; k < kReferenceNodeCounts.size(); ++k) {
            out.push_back({kReferenceSizesMb[s], kReferenceNodeCounts[k], kReferenceMakespans[k][s]});
        }
    }
    return out;
}

double sum_squared_residuals(const OverheadModel& model, std::span<const Observation> observations) {
    double sum = 0.0;
    for (const auto& o : observations) {
        const double r = model.even_split_makespan(o.size_mb, o.nodes) - o.makespan_s;
        sum += r * r;
    }
    return sum;
}

CalibrationReport calibrate(const OverheadModel& start, std::span<const Observation> observations,
                            const CalibrationOptions& options) {
    start.validate();
    if (observations.size() < kParams) {
        throw IllPosed("calibration needs at least 4 observations, got " +
                       std::to_string(observations.size()));
    }
    for (const auto& o : observations) {
        if (o.nodes < 1 || !(o.size_mb > 0.0) || !std::isfinite(o.makespan_s)) {
            throw IllPosed("calibration observations need nodes >= 1, positive size and finite time");
        }
    }

    const std::size_t n = observations.size();
    std::vector<Vec> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = features(observations[i]);

    // Unit-norm columns keep every coordinate step well scaled.
    Vec scale{};
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < kParams; ++j) scale[j] += r[j] * r[j];
    }
    for (std::size_t j = 0; j < kParams; ++j) {
        if (scale[j] == 0.0) {
            throw IllPosed("observations do not exercise every model parameter");
        }
        scale[j] = std::sqrt(scale[j]);
    }
    for (auto& r : rows) {
        for (std::size_t j = 0; j < kParams; ++j) r[j] /= scale[j];
    }

    std::vector<std::vector<double>> gram(kParams, std::vector<double>(kParams, 0.0));
    for (const auto& r : rows) {
        for (std::size_t a = 0; a < kParams; ++a) {
            for (std::size_t b = 0; b < kParams; ++b) gram[a][b] += r[a] * r[b];
        }
    }
    {
        std::vector<double> probe(kParams, 1.0);
        if (!solve(gram, probe, 1e-10)) {
            throw IllPosed("observations cannot separate the four overhead parameters");
        }
    }

    Vec u = costs_of(start);
    for (std::size_t j = 0; j < kParams; ++j) u[j] *= scale[j];

    std::vector<double> resid(n);
    for (std::size_t i = 0; i < n; ++i) {
        double fit = 0.0;
        for (std::size_t j = 0; j < kParams; ++j) fit += rows[i][j] * u[j];
        resid[i] = observations[i].makespan_s - fit;
    }

    std::size_t sweep = 0;
    for (; sweep < options.max_sweeps; ++sweep) {
        double max_rel_change = 0.0;
        for (std::size_t j = 0; j < kParams; ++j) {
            double g = 0.0;
            for (std::size_t i = 0; i < n; ++i) g += rows[i][j] * resid[i];
            const double updated = std::max(0.0, u[j] + g);
            const double delta = updated - u[j];
            if (delta != 0.0) {
                for (std::size_t i = 0; i < n; ++i) resid[i] -= rows[i][j] * delta;
                u[j] = updated;
                max_rel_change = std::max(max_rel_change, std::abs(delta) / std::max(1.0, std::abs(updated)));
            }
        }
        if (max_rel_change < options.tolerance) break;
    }

    // Exact least squares on the active set; descent alone converges slowly
    // along correlated columns.
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < kParams; ++j) {
        if (u[j] > 0.0) active.push_back(j);
    }
    if (!active.empty()) {
        std::vector<std::vector<double>> g(active.size(), std::vector<double>(active.size()));
        std::vector<double> rhs(active.size(), 0.0);
        for (std::size_t a = 0; a < active.size(); ++a) {
            for (std::size_t b = 0; b < active.size(); ++b) g[a][b] = gram[active[a]][active[b]];
            for (std::size_t i = 0; i < n; ++i) rhs[a] += rows[i][active[a]] * observations[i].makespan_s;
        }
        if (solve(g, rhs, 1e-14) && std::all_of(rhs.begin(), rhs.end(), [](double v) { return v > 0.0; })) {
            Vec polished{};
            for (std::size_t a = 0; a < active.size(); ++a) polished[active[a]] = rhs[a];
            Vec c_polished{}, c_descent{};
            for (std::size_t j = 0; j < kParams; ++j) {
                c_polished[j] = polished[j] / scale[j];
                c_descent[j] = u[j] / scale[j];
            }
            if (sum_squared_residuals(model_of(c_polished), observations) <=
                sum_squared_residuals(model_of(c_descent), observations)) {
                u = polished;
            }
        }
    }

    Vec c{};
    for (std::size_t j = 0; j < kParams; ++j) c[j] = u[j] / scale[j];
    CalibrationReport rep;
    rep.model = model_of(c);
    rep.residual = sum_squared_residuals(rep.model, observations);
    rep.sweeps = sweep;
    return rep;
}

std::vector<OrderingVerdict> compare_orderings(const OverheadModel& model,
                                               std::span<const Observation> observations) {
    std::vector<double> sizes;
    std::map<double, std::vector<Observation>> by_size;
    for (const auto& o : observations) {
        if (!by_size.contains(o.size_mb)) sizes.push_back(o.size_mb);
        by_size[o.size_mb].push_back(o);
    }

    auto sign = [](double d) { return (d > 0.0) - (d < 0.0); };

    std::vector<OrderingVerdict> out;
    for (double size : sizes) {
        auto obs = by_size[size];
        std::stable_sort(obs.begin(), obs.end(),
                         [](const Observation& a, const Observation& b) { return a.nodes < b.nodes; });
        std::vector<std::size_t> counts;
        for (const auto& o : obs) counts.push_back(o.nodes);
        const double one[] = {size};
        const auto sim = scaling_experiment(one, counts, model);

        bool ok = true;
        for (std::size_t i = 0; i < obs.size(); ++i) {
            for (std::size_t j = i + 1; j < obs.size(); ++j) {
                ok = ok && sign(obs[j].makespan_s - obs[i].makespan_s) ==
                               sign(sim[j].makespan - sim[i].makespan);
            }
        }
        out.push_back({size, ok});
    }
    return out;
}

}  // namespace twlga
