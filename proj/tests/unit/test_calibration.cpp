#include <doctest.h>

#include "twlga/calibration.hpp"
#include "twlga/error.hpp"

using namespace twlga;

namespace {

std::vector<Observation> synthetic(const OverheadModel& m) {
    std::vector<Observation> out;
    for (double size : kReferenceSizesMb) {
        for (std::size_t k : kReferenceNodeCounts) out.push_back({size, k, m.even_split_makespan(size, k)});
    }
    return out;
}

}  // namespace

TEST_CASE("calibrate: recovers a known model within 1%") {
    const OverheadModel truths[] = {
        {5.0, 12.0, 4.0, 2.5},
        {0.8, 30.0, 1.5, 2.0},
        {15.0, 3.0, 20.0, 0.9},
    };
    for (const auto& truth : truths) {
        const auto rep = calibrate(OverheadModel{}, synthetic(truth));
        CHECK(rep.model.startup == doctest::Approx(truth.startup).epsilon(0.01));
        CHECK(rep.model.coordination == doctest::Approx(truth.coordination).epsilon(0.01));
        CHECK(rep.model.transfer_rate == doctest::Approx(truth.transfer_rate).epsilon(0.01));
        CHECK(rep.model.compute_rate == doctest::Approx(truth.compute_rate).epsilon(0.01));
        CHECK(rep.residual < 1e-6);
    }
}

TEST_CASE("calibrate: deterministic") {
    const auto a = calibrate(OverheadModel{}, reference_observations());
    const auto b = calibrate(OverheadModel{}, reference_observations());
    CHECK(a.model == b.model);
    CHECK(a.residual == b.residual);
}

TEST_CASE("calibrate: reference data reproduces every per-size ordering") {
    const auto obs = reference_observations();
    REQUIRE(obs.size() == 15);
    const auto rep = calibrate(OverheadModel{}, obs);
    const auto verdicts = compare_orderings(rep.model, obs);
    REQUIRE(verdicts.size() == 5);
    for (const auto& v : verdicts) CHECK(v.matches);
}

TEST_CASE("calibrate: ill-posed inputs") {
    const auto obs = reference_observations();
    CHECK_THROWS_AS(calibrate(OverheadModel{}, std::span(obs).first(3)), IllPosed);
    const std::vector<Observation> same(6, Observation{160, 2, 38});
    CHECK_THROWS_AS(calibrate(OverheadModel{}, same), IllPosed);
    // One node count only: coordination and transfer are invisible.
    std::vector<Observation> single_k;
    for (double s : kReferenceSizesMb) single_k.push_back({s, 1, s / 3});
    CHECK_THROWS_AS(calibrate(OverheadModel{}, single_k), IllPosed);
}

TEST_CASE("compare_orderings: single node count matches trivially") {
    const std::vector<Observation> obs{{160, 1, 29}, {320, 1, 64}};
    for (const auto& v : compare_orderings(OverheadModel{}, obs)) CHECK(v.matches);
}

TEST_CASE("reference table layout") {
    const auto obs = reference_observations();
    CHECK(obs.front().size_mb == 160);
    CHECK(obs.front().nodes == 1);
    CHECK(obs.front().makespan_s == 29);
    CHECK(obs[2].makespan_s == 55);
    CHECK(obs.back().size_mb == 2600);
    CHECK(obs.back().nodes == 3);
    CHECK(obs.back().makespan_s == 901);
    CHECK(obs[12].makespan_s == 1213);
    CHECK(obs[13].makespan_s == 1054);
}
