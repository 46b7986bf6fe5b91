#include "twlga/fitness.hpp"

#include <string>

#include "twlga/error.hpp"

namespace twlga {

std::string_view to_string(FitnessMode mode) noexcept {
    return mode == FitnessMode::Twlga ? "twlga" : "time-only";
}

FitnessMode parse_fitness_mode(std::string_view text) {
    if (text == "twlga" || text == "TWLGA" || text == "Twlga") return FitnessMode::Twlga;
    if (text == "time-only" || text == "time_only" || text == "TimeOnly" || text == "time") {
        return FitnessMode::TimeOnly;
    }
    throw InvalidParams("unknown fitness mode '" + std::string(text) + "'");
}

FitnessReport fitness(const Chromosome& c, const EtcMatrix& etc, const std::vector<double>& workloads,
                      FitnessMode mode) {
    if (workloads.size() != etc.nodes()) {
        throw InvalidArgument("fitness: one workload per node required");
    }
    FitnessReport r;
    r.each_resource_time = each_resource_time(c, etc);
    r.bottleneck_node = bottleneck_node(r.each_resource_time);
    r.job_final_time = r.each_resource_time[r.bottleneck_node];
    r.bottleneck_workload = workloads[r.bottleneck_node];
    r.p_time = 1.0 / r.job_final_time;
    r.optimum = mode == FitnessMode::Twlga
                    ? 1.0 / (r.job_final_time * (1.0 + r.bottleneck_workload))
                    : r.p_time;
    return r;
}

FitnessReport fitness(const Chromosome& c, const Instance& inst, FitnessMode mode) {
    inst.validate();
    return fitness(c, inst.etc, inst.workloads(), mode);
}

}  // namespace twlga
