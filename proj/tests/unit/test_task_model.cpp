#include <doctest.h>

#include <random>

#include "twlga/error.hpp"
#include "twlga/instance_io.hpp"
#include "twlga/task_model.hpp"

using namespace twlga;

TEST_CASE("node_workload: idle, saturated and direct substitution") {
    const WorkloadWeights any{0.25, 0.25, 0.4, 0.1};
    CHECK(node_workload({0, 0, 0, 0}, any) == 0.0);
    CHECK(node_workload({1, 1, 1, 1}, any) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(node_workload({0.8, 0.6, 0.4, 0.2}, WorkloadWeights{0.4, 0.3, 0.2, 0.1}) ==
          doctest::Approx(0.60).epsilon(1e-12));
}

TEST_CASE("node_workload: rejects invalid usage and weights") {
    CHECK_THROWS_AS(node_workload({1.2, 0, 0, 0}, {}), InvalidArgument);
    CHECK_THROWS_AS(node_workload({0, -0.1, 0, 0}, {}), InvalidArgument);
    CHECK_THROWS_AS(node_workload({0, 0, 0, 0}, WorkloadWeights{0.5, 0.5, 0.5, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(node_workload({0, 0, 0, 0}, WorkloadWeights{1.1, -0.1, 0, 0}), InvalidArgument);
}

TEST_CASE("node_workload: linear in usage and bounded for random inputs") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double w[4] = {u(rng), u(rng), u(rng), u(rng)};
        const double sum = w[0] + w[1] + w[2] + w[3];
        const WorkloadWeights weights{w[0] / sum, w[1] / sum, w[2] / sum, w[3] / sum};

        const ResourceUsage usage{u(rng), u(rng), u(rng), u(rng)};
        const double a = u(rng);
        const double base = node_workload(usage, weights);
        CHECK(base >= 0.0);
        CHECK(base <= 1.0);
        const ResourceUsage scaled{a * usage.cpu, a * usage.mem, a * usage.disk, a * usage.net};
        CHECK(node_workload(scaled, weights) == doctest::Approx(a * base).epsilon(1e-12));
    }
}

TEST_CASE("generate_instance: homogeneous nodes give identical columns") {
    const auto inst = generate_instance(3, 2, 1.0, 99);
    for (std::size_t t = 0; t < 3; ++t) CHECK(inst.etc(t, 0) == inst.etc(t, 1));
}

TEST_CASE("generate_instance: deterministic in its arguments") {
    CHECK(generate_instance(6, 4, 3.0, 5) == generate_instance(6, 4, 3.0, 5));
    CHECK_FALSE(generate_instance(6, 4, 3.0, 5) == generate_instance(6, 4, 3.0, 6));
}

TEST_CASE("generate_instance: entries bounded by base range times speed range") {
    // base in [1, 100], speed in [1, h=4] -> entries in [1, 400]; scan everything.
    const auto inst = generate_instance(5, 3, 4.0, 7);
    for (double e : inst.etc.data()) {
        CHECK(e >= 1.0);
        CHECK(e <= 400.0);
    }
    for (std::size_t seed = 0; seed < 50; ++seed) {
        const auto big = generate_instance(40, 6, 4.0, seed);
        for (double e : big.etc.data()) {
            CHECK(e >= 1.0);
            CHECK(e <= 400.0);
        }
        CHECK_NOTHROW(big.validate());
    }
}

TEST_CASE("generate_instance: rejects bad dimensions") {
    CHECK_THROWS_AS(generate_instance(0, 2, 1.0, 1), InvalidArgument);
    CHECK_THROWS_AS(generate_instance(2, 0, 1.0, 1), InvalidArgument);
    CHECK_THROWS_AS(generate_instance(2, 2, 0.5, 1), InvalidArgument);
}

TEST_CASE("EtcMatrix validates shape and entries") {
    CHECK_THROWS_AS(EtcMatrix(2, 2, {1, 2, 3}), InvalidArgument);
    CHECK_THROWS_AS(EtcMatrix(1, 2, {1, 0}), InvalidArgument);
    CHECK_THROWS_AS(EtcMatrix(std::vector<std::vector<double>>{{1, 2}, {3}}), InvalidArgument);
    const EtcMatrix m({{2, 4}, {3, 1}});
    CHECK(m(1, 0) == 3);
    CHECK_THROWS_AS(m.at(2, 0), InvalidArgument);
}

TEST_CASE("Instance validate catches dimension mismatch") {
    auto inst = generate_instance(3, 2, 1.0, 1);
    inst.nodes.usage.pop_back();
    CHECK_THROWS_AS(inst.validate(), InvalidArgument);
    inst = generate_instance(3, 2, 1.0, 1);
    inst.etc = EtcMatrix({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(inst.validate(), InvalidArgument);
    inst = generate_instance(3, 2, 1.0, 1);
    inst.tasks.sizes_mb = std::vector<double>{1.0, 2.0};
    CHECK_THROWS_AS(inst.validate(), InvalidArgument);
}

TEST_CASE("instance JSON round trip is exact") {
    const auto inst = generate_instance(7, 3, 2.5, 11);
    CHECK(instance_from_json(instance_to_json(inst)) == inst);

    auto no_sizes = inst;
    no_sizes.tasks.sizes_mb.reset();
    no_sizes.weights = WorkloadWeights{0.7, 0.1, 0.1, 0.1};
    CHECK(instance_from_json(instance_to_json(no_sizes, -1)) == no_sizes);
}

TEST_CASE("instance JSON: schema errors are invalid-argument") {
    CHECK_THROWS_AS(instance_from_json("{"), InvalidArgument);
    CHECK_THROWS_AS(instance_from_json(R"({"tasks":{"count":1}})"), InvalidArgument);
    CHECK_THROWS_AS(instance_from_json(
                        R"({"tasks":{"count":1},"nodes":{"usage":[[0,0,0]]},"etc":[[1]]})"),
                    InvalidArgument);
    const auto ok = instance_from_json(
        R"({"tasks":{"count":2},"nodes":{"usage":[[0,0,0,0],[1,1,1,1]]},"etc":[[2,4],[3,1]]})");
    CHECK(ok.n_tasks() == 2);
    CHECK(ok.weights == WorkloadWeights{});
    CHECK(ok.workload(1) == doctest::Approx(1.0));
}
