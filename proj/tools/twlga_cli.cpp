// twlga: experiment driver.
//
//   twlga compare      --config exp.json [--seed 1,2,3] [--out dir]
//   twlga scaling      [--config exp.json] [--out dir]
//   twlga pipeline     --input traces/ --lambda0 154574 --slope 10 --t0 25 [--out dir]
//   twlga gen-instance --tasks 8 --nodes 3 [--heterogeneity 4] [--instance-seed 7] [--out dir]
//   twlga run          --instance inst.json --seed 1 [--fitness-mode twlga] [--out dir]
//
// Flags override values from --config. Exit status is 0 on success, 1 on any error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twlga/error.hpp"
#include "twlga/experiment.hpp"

namespace ex = twlga::experiment;

namespace {

struct Flags {
    std::string config;
    std::vector<std::uint64_t> seeds;
    std::string out;
    bool timing = false;

    // instance selection
    std::vector<std::string> instance_files;
    std::optional<std::size_t> tasks;
    std::optional<std::size_t> nodes;
    std::optional<double> heterogeneity;
    std::optional<std::uint64_t> instance_seed;

    // GA
    std::optional<std::size_t> population;
    std::optional<std::size_t> generations;
    std::optional<std::string> fitness_mode;
    std::optional<std::string> rate_form;

    // scaling
    bool reference = false;

    // pipeline
    std::string input;
    std::optional<double> lambda0;
    std::optional<double> slope;
    std::optional<double> t0;
    bool keep_day = false;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON experiment manifest");
    cmd->add_option("--seed", f.seeds, "Seed list, comma separated")->delimiter(',');
    cmd->add_option("--out", f.out, "Output directory");
}

void add_instance_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--instance", f.instance_files, "Instance JSON file (repeatable)");
    cmd->add_option("--tasks", f.tasks, "Generated instance: number of tasks");
    cmd->add_option("--nodes", f.nodes, "Generated instance: number of nodes");
    cmd->add_option("--heterogeneity", f.heterogeneity, "Generated instance: node speed spread (>= 1)");
    cmd->add_option("--instance-seed", f.instance_seed, "Generated instance: generator seed");
}

void add_ga_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--population", f.population, "GA population size");
    cmd->add_option("--generations", f.generations, "GA generation budget");
    cmd->add_option("--fitness-mode", f.fitness_mode, "twlga or time-only");
    cmd->add_option("--rate-form", f.rate_form, "scaled or interpolated");
}

ex::ExperimentConfig build_config(ex::Mode mode, const Flags& f) {
    ex::ExperimentConfig cfg = f.config.empty() ? ex::ExperimentConfig{} : ex::load_config(f.config);
    cfg.mode = mode;
    if (!f.seeds.empty()) cfg.seeds = f.seeds;
    if (!f.out.empty()) cfg.out_dir = f.out;
    if (f.timing) cfg.timing = true;

    if (!f.instance_files.empty()) {
        cfg.instances.clear();
        for (const auto& p : f.instance_files) cfg.instances.push_back({std::nullopt, p});
    }
    if (f.tasks || f.nodes || f.heterogeneity || f.instance_seed) {
        ex::GeneratedInstance g;
        if (!cfg.instances.empty() && cfg.instances.front().generate) g = *cfg.instances.front().generate;
        if (f.tasks) g.n_tasks = *f.tasks;
        if (f.nodes) g.n_nodes = *f.nodes;
        if (f.heterogeneity) g.heterogeneity = *f.heterogeneity;
        if (f.instance_seed) g.seed = *f.instance_seed;
        if (f.instance_files.empty()) cfg.instances.clear();
        cfg.instances.push_back({g, std::nullopt});
    }
    if (mode == ex::Mode::SingleRun && cfg.seeds.empty()) cfg.seeds = {cfg.ga.seed};
    if (mode == ex::Mode::GenInstance && cfg.instances.empty()) cfg.instances.push_back({ex::GeneratedInstance{}, std::nullopt});

    if (f.population) cfg.ga.population = *f.population;
    if (f.generations) cfg.ga.generations = *f.generations;
    if (f.fitness_mode) cfg.ga.fitness_mode = twlga::parse_fitness_mode(*f.fitness_mode);
    if (f.rate_form) cfg.ga.rate_form = twlga::parse_rate_form(*f.rate_form);

    if (f.reference) cfg.observations = twlga::reference_observations();

    if (!f.input.empty()) cfg.pipeline.input_dir = f.input;
    if (f.lambda0 || f.slope || f.t0) {
        auto cal = cfg.pipeline.calibration.value_or(twlga::sensor::Calibration{});
        if (f.lambda0) cal.lambda0 = *f.lambda0;
        if (f.slope) cal.slope = *f.slope;
        if (f.t0) cal.t0 = *f.t0;
        cfg.pipeline.calibration = cal;
    }
    if (f.keep_day) cfg.pipeline.keep_day = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TWLGA scheduling experiments, cluster scaling model and sensor trace pipeline"};
    app.require_subcommand(1);
    Flags f;

    auto* compare = app.add_subcommand("compare", "Compare GA and baseline schedulers over instances and seeds");
    add_common(compare, f);
    add_instance_flags(compare, f);
    add_ga_flags(compare, f);
    compare->add_flag("--timing", f.timing, "Also write wall-clock timings.csv");

    auto* scaling = app.add_subcommand("scaling", "Calibrate the overhead model and emit the size x nodes grid");
    add_common(scaling, f);
    scaling->add_flag("--reference", f.reference, "Calibrate against the built-in reference table");

    auto* pipeline = app.add_subcommand("pipeline", "Merge sensor traces by year and extract temperatures");
    add_common(pipeline, f);
    pipeline->add_option("--input", f.input, "Directory of trace files");
    pipeline->add_option("--lambda0", f.lambda0, "Wavelength at the reference temperature (raw units)");
    pipeline->add_option("--slope", f.slope, "Raw wavelength units per degree Celsius");
    pipeline->add_option("--t0", f.t0, "Reference temperature in Celsius");
    pipeline->add_flag("--keep-day", f.keep_day, "Keep the day column in extracted.csv");

    auto* gen = app.add_subcommand("gen-instance", "Write a synthetic instance as JSON");
    add_common(gen, f);
    add_instance_flags(gen, f);

    auto* run = app.add_subcommand("run", "Single GA run; writes the per-generation trace");
    add_common(run, f);
    add_instance_flags(run, f);
    add_ga_flags(run, f);

    CLI11_PARSE(app, argc, argv);

    try {
        ex::Mode mode = ex::Mode::Compare;
        if (*scaling) mode = ex::Mode::Scaling;
        if (*pipeline) mode = ex::Mode::Pipeline;
        if (*gen) mode = ex::Mode::GenInstance;
        if (*run) mode = ex::Mode::SingleRun;

        const auto cfg = build_config(mode, f);
        std::cout << ex::run_and_write(cfg) << '\n';
        std::cout << "wrote " << (cfg.out_dir / "summary.json").string() << '\n';
    } catch (const twlga::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
