#include "twlga/baselines.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "twlga/error.hpp"

namespace twlga {

Chromosome schedule_fifo(const Instance& inst) {
    inst.validate();
    const std::size_t R = inst.n_nodes();
    std::vector<double> ready(R, 0.0);
    Chromosome c;
    c.genes.resize(inst.n_tasks());
    for (std::size_t t = 0; t < inst.n_tasks(); ++t) {
        std::size_t pick = 0;
        double best = ready[0] + inst.etc(t, 0);
        for (std::size_t r = 1; r < R; ++r) {
            const double finish = ready[r] + inst.etc(t, r);
            if (finish < best) {
                best = finish;
                pick = r;
            }
        }
        ready[pick] = best;
        c.genes[t] = static_cast<Gene>(pick + 1);
    }
    return c;
}

Chromosome schedule_round_robin(const Instance& inst) {
    inst.validate();
    Chromosome c;
    c.genes.resize(inst.n_tasks());
    for (std::size_t t = 0; t < c.size(); ++t) c.genes[t] = static_cast<Gene>(t % inst.n_nodes() + 1);
    return c;
}

Chromosome schedule_random(const Instance& inst, std::uint64_t seed) {
    inst.validate();
    Rng rng(seed);
    return random_chromosome(inst.n_tasks(), inst.n_nodes(), rng);
}

std::uint64_t search_space_size(std::size_t n_tasks, std::size_t n_nodes) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n_tasks; ++i) {
        if (n_nodes != 0 && size > kMax / n_nodes) return kMax;
        size *= n_nodes;
    }
    return size;
}

OptimumResult brute_force_optimum(const Instance& inst, std::uint64_t guard) {
    inst.validate();
    const std::size_t N = inst.n_tasks();
    const std::size_t R = inst.n_nodes();
    const std::uint64_t space = search_space_size(N, R);
    if (space > guard) {
        throw TooLarge("brute force over " + std::to_string(R) + "^" + std::to_string(N) +
                       " assignments exceeds the guard of " + std::to_string(guard));
    }

    Chromosome cur;
    cur.genes.assign(N, 1);
    OptimumResult best{cur, std::numeric_limits<double>::infinity()};
    std::vector<double> load(R);

    // Odometer with the last gene varying fastest visits gene strings in
    // lexicographic order, so keeping only strict improvements yields the
    // lexicographically smallest minimizer.
    for (std::uint64_t k = 0; k < space; ++k) {
        std::fill(load.begin(), load.end(), 0.0);
        for (std::size_t j = 0; j < N; ++j) load[cur.node_of(j)] += inst.etc(j, cur.node_of(j));
        double span = load[0];
        for (std::size_t r = 1; r < R; ++r) span = std::max(span, load[r]);
        if (span < best.makespan) {
            best.makespan = span;
            best.chromosome = cur;
        }
        for (std::size_t j = N; j-- > 0;) {
            if (cur.genes[j] < R) {
                ++cur.genes[j];
                break;
            }
            cur.genes[j] = 1;
        }
    }
    return best;
}

}  // namespace twlga
