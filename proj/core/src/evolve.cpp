#include "twlga/evolve.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <span>

#include "twlga/csv.hpp"
#include "twlga/error.hpp"
#include "twlga/operators.hpp"

namespace twlga {

namespace {

class Population {
public:
    Population(const Instance& inst, const GaParams& params)
        : inst_(inst), params_(params), workloads_(inst.workloads()) {}

    double evaluate(const Chromosome& c) const {
        return fitness(c, inst_.etc, workloads_, params_.fitness_mode).optimum;
    }

    FitnessReport report(const Chromosome& c) const {
        return fitness(c, inst_.etc, workloads_, params_.fitness_mode);
    }

private:
    const Instance& inst_;
    const GaParams& params_;
    std::vector<double> workloads_;
};

std::size_t tournament(std::span<const double> fit, std::size_t size, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, fit.size() - 1);
    std::size_t best = pick(rng);
    for (std::size_t k = 1; k < size; ++k) {
        const std::size_t c = pick(rng);
        if (fit[c] > fit[best] || (fit[c] == fit[best] && c < best)) best = c;
    }
    return best;
}

}  // namespace

EvolutionTrace evolve(const Instance& inst, const GaParams& params) {
    params.validate();
    inst.validate();

    const std::size_t P = params.population;
    const std::size_t n_nodes = inst.n_nodes();
    Population eval(inst, params);
    Rng rng(params.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<Chromosome> pop;
    std::vector<double> fit;
    pop.reserve(P);
    fit.reserve(P);
    for (std::size_t i = 0; i < P; ++i) {
        pop.push_back(random_chromosome(inst.n_tasks(), n_nodes, rng));
        fit.push_back(eval.evaluate(pop.back()));
    }

    EvolutionTrace trace;
    double best_ever = -1.0;

    auto record = [&](std::size_t gen, double pc_mean, double pm_mean) {
        const auto stats = PopulationStats::of(fit);
        const auto top = static_cast<std::size_t>(std::max_element(fit.begin(), fit.end()) - fit.begin());
        const auto rep = eval.report(pop[top]);
        trace.generations.push_back(
            {gen, stats.f_max, stats.f_mean, rep.job_final_time, pc_mean, pm_mean});
        if (fit[top] > best_ever) {
            best_ever = fit[top];
            trace.best = pop[top];
            trace.best_report = rep;
        }
    };
    record(0, 0.0, 0.0);

    std::vector<std::size_t> order(P);
    std::vector<Chromosome> next;
    std::vector<double> next_fit;
    for (std::size_t gen = 1; gen <= params.generations; ++gen) {
        const auto stats = PopulationStats::of(fit);

        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fit[a] > fit[b]; });

        next.clear();
        next_fit.clear();
        for (std::size_t e = 0; e < params.elitism; ++e) {
            next.push_back(pop[order[e]]);
            next_fit.push_back(fit[order[e]]);
        }

        double pc_sum = 0.0, pm_sum = 0.0;
        std::size_t pairs = 0, children = 0;
        while (next.size() < P) {
            const std::size_t a = tournament(fit, params.tournament_size, rng);
            const std::size_t b = tournament(fit, params.tournament_size, rng);
            const double pc = adaptive_crossover_rate(stats, std::max(fit[a], fit[b]), params);
            pc_sum += pc;
            ++pairs;

            auto [x, y] = coin(rng) < pc ? crossover(pop[a], pop[b], rng)
                                         : std::pair<Chromosome, Chromosome>{pop[a], pop[b]};
            for (Chromosome* child : {&x, &y}) {
                if (next.size() == P) break;
                double f = eval.evaluate(*child);
                const double pm = adaptive_mutation_rate(stats, f, params);
                pm_sum += pm;
                ++children;
                if (coin(rng) < pm) {
                    *child = mutate(*child, n_nodes, rng);
                    f = eval.evaluate(*child);
                }
                next.push_back(std::move(*child));
                next_fit.push_back(f);
            }
        }

        pop.swap(next);
        fit.swap(next_fit);
        record(gen, pairs ? pc_sum / static_cast<double>(pairs) : 0.0,
               children ? pm_sum / static_cast<double>(children) : 0.0);
    }
    return trace;
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
    out << "generation,best_fitness,mean_fitness,best_makespan\n";
    for (const auto& g : trace.generations) {
        out << g.generation << ',' << format_double(g.best_fitness) << ','
            << format_double(g.mean_fitness) << ',' << format_double(g.best_makespan) << '\n';
    }
}

}  // namespace twlga
