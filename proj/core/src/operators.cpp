#include "twlga/operators.hpp"

#include <algorithm>

#include "twlga/error.hpp"

namespace twlga {

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut) {
    if (a.size() != b.size()) throw InvalidArgument("crossover: parents differ in length");
    if (cut > a.size()) throw InvalidArgument("crossover: cut beyond chromosome length");
    Chromosome x = a;
    Chromosome y = b;
    std::swap_ranges(x.genes.begin() + static_cast<std::ptrdiff_t>(cut), x.genes.end(),
                     y.genes.begin() + static_cast<std::ptrdiff_t>(cut));
    return {std::move(x), std::move(y)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
    if (a.size() != b.size()) throw InvalidArgument("crossover: parents differ in length");
    if (a.size() < 2) return {a, b};
    std::uniform_int_distribution<std::size_t> pick(1, a.size() - 1);
    return crossover_at(a, b, pick(rng));
}

Chromosome mutate(const Chromosome& c, std::size_t n_nodes, Rng& rng) {
    if (c.genes.empty() || n_nodes < 1) throw InvalidArgument("mutate: empty chromosome or no nodes");
    Chromosome out = c;
    std::uniform_int_distribution<std::size_t> pos(0, c.size() - 1);
    std::uniform_int_distribution<Gene> node(1, static_cast<Gene>(n_nodes));
    const std::size_t j = pos(rng);
    out.genes[j] = node(rng);
    return out;
}

}  // namespace twlga
