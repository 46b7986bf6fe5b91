#include <doctest.h>

#include "../oracles.hpp"
#include "twlga/error.hpp"
#include "twlga/operators.hpp"

using namespace twlga;

TEST_CASE("crossover: identical parents give identical children") {
    Rng rng(1);
    const Chromosome p{{3, 1, 2, 2, 1}};
    const auto [x, y] = crossover(p, p, rng);
    CHECK(x == p);
    CHECK(y == p);
}

TEST_CASE("crossover_at: cut 2 swaps suffixes") {
    const auto [x, y] = crossover_at(Chromosome{{1, 1, 1, 1}}, Chromosome{{2, 2, 2, 2}}, 2);
    CHECK(x.genes == std::vector<Gene>{1, 1, 2, 2});
    CHECK(y.genes == std::vector<Gene>{2, 2, 1, 1});
}

TEST_CASE("crossover: per-position gene multiset preserved, cut in [1, N-1]") {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const auto a = random_chromosome(9, 4, rng);
        const auto b = random_chromosome(9, 4, rng);
        const auto [x, y] = crossover(a, b, rng);
        for (std::size_t j = 0; j < 9; ++j) {
            const bool kept = x.genes[j] == a.genes[j] && y.genes[j] == b.genes[j];
            const bool swapped = x.genes[j] == b.genes[j] && y.genes[j] == a.genes[j];
            CHECK((kept || swapped));
        }
        // Position 0 always comes from the own parent; the last always from the other.
        CHECK(x.genes.front() == a.genes.front());
        CHECK(x.genes.back() == b.genes.back());
    }
}

TEST_CASE("crossover: single gene returns parents") {
    Rng rng(2);
    const auto [x, y] = crossover(Chromosome{{1}}, Chromosome{{2}}, rng);
    CHECK(x.genes == std::vector<Gene>{1});
    CHECK(y.genes == std::vector<Gene>{2});
}

TEST_CASE("crossover: length mismatch") {
    Rng rng(2);
    CHECK_THROWS_AS(crossover(Chromosome{{1, 2}}, Chromosome{{1}}, rng), InvalidArgument);
}

TEST_CASE("mutate: one node leaves the chromosome unchanged") {
    Rng rng(4);
    const Chromosome c{{1, 1, 1, 1}};
    CHECK(mutate(c, 1, rng) == c);
}

TEST_CASE("mutate: at most one position changes, output stays valid") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto c = random_chromosome(7, 3, rng);
        const auto m = mutate(c, 3, rng);
        int diff = 0;
        for (std::size_t j = 0; j < 7; ++j) diff += c.genes[j] != m.genes[j];
        CHECK(diff <= 1);
        CHECK_NOTHROW(m.validate(7, 3));
    }
}

TEST_CASE("mutate: changed-position histogram uniform within 5 sigma") {
    // Each mutation of (1,...,1) with R = 2 changes position j with
    // probability (1/N) * (1/2).
    constexpr std::size_t N = 10;
    constexpr int trials = 10'000;
    Rng rng(31337);
    const Chromosome ones{std::vector<Gene>(N, 1)};
    std::vector<double> hist(N, 0.0);
    for (int i = 0; i < trials; ++i) {
        const auto m = mutate(ones, 2, rng);
        for (std::size_t j = 0; j < N; ++j) hist[j] += m.genes[j] != 1;
    }
    const auto [lo, hi] = oracle::binomial_5sigma(trials, 0.5 / N);
    for (double h : hist) {
        CHECK(h >= lo);
        CHECK(h <= hi);
    }
}
