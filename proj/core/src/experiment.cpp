#include "twlga/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "twlga/baselines.hpp"
#include "twlga/csv.hpp"
#include "twlga/error.hpp"
#include "twlga/instance_io.hpp"

namespace twlga::experiment {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

template <class T>
T field(const json& obj, const char* section, const char* name) {
    try {
        return obj.at(name).get<T>();
    } catch (const json::exception& e) {
        throw InvalidParams(std::string(section) + "." + name + ": " + e.what());
    }
}

template <class T>
void maybe(const json& obj, const char* section, const char* name, T& out) {
    if (obj.contains(name)) out = field<T>(obj, section, name);
}

GaParams parse_ga(const json& j, GaParams ga) {
    maybe(j, "ga", "population", ga.population);
    maybe(j, "ga", "generations", ga.generations);
    maybe(j, "ga", "p_c1", ga.p_c1);
    maybe(j, "ga", "p_c2", ga.p_c2);
    maybe(j, "ga", "p_m1", ga.p_m1);
    maybe(j, "ga", "p_m2", ga.p_m2);
    maybe(j, "ga", "elitism", ga.elitism);
    maybe(j, "ga", "tournament_size", ga.tournament_size);
    maybe(j, "ga", "seed", ga.seed);
    if (j.contains("fitness_mode")) {
        ga.fitness_mode = parse_fitness_mode(field<std::string>(j, "ga", "fitness_mode"));
    }
    if (j.contains("rate_form")) ga.rate_form = parse_rate_form(field<std::string>(j, "ga", "rate_form"));
    return ga;
}

OverheadModel parse_overhead(const json& j) {
    OverheadModel m;
    maybe(j, "overhead", "startup", m.startup);
    maybe(j, "overhead", "coordination", m.coordination);
    if (j.contains("transfer_rate")) {
        m.transfer_rate = j.at("transfer_rate").is_null() ? std::numeric_limits<double>::infinity()
                                                          : field<double>(j, "overhead", "transfer_rate");
    }
    maybe(j, "overhead", "compute_rate", m.compute_rate);
    return m;
}

json rate_json(double rate) {
    return std::isinf(rate) ? json(nullptr) : json(rate);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    out << text;
    if (!out) throw IoError(path.string(), "write failed");
}

std::string label_of(std::size_t index, const InstanceSource& src) {
    return std::to_string(index) + ":" + src.label();
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
        case Mode::Compare: return "compare";
        case Mode::Scaling: return "scaling";
        case Mode::Pipeline: return "pipeline";
        case Mode::SingleRun: return "single-run";
        case Mode::GenInstance: return "gen-instance";
    }
    return "compare";
}

Mode parse_mode(std::string_view text) {
    for (Mode m : {Mode::Compare, Mode::Scaling, Mode::Pipeline, Mode::SingleRun, Mode::GenInstance}) {
        if (text == to_string(m)) return m;
    }
    if (text == "run") return Mode::SingleRun;
    throw InvalidParams("mode: unknown mode '" + std::string(text) + "'");
}

std::string InstanceSource::label() const {
    if (file) return file->stem().string();
    if (generate) {
        std::ostringstream ss;
        ss << "gen-" << generate->n_tasks << "x" << generate->n_nodes << "-h"
           << format_double(generate->heterogeneity) << "-s" << generate->seed;
        return ss.str();
    }
    return "empty";
}

Instance InstanceSource::load() const {
    if (file) return load_instance(*file);
    if (generate) {
        return generate_instance(generate->n_tasks, generate->n_nodes, generate->heterogeneity,
                                 generate->seed);
    }
    throw InvalidParams("instances: entry has neither 'generate' nor 'file'");
}

void ExperimentConfig::validate() const {
    auto need_instances = [&] {
        if (instances.empty()) throw InvalidParams("instances: at least one instance is required");
        for (const auto& s : instances) {
            if (!s.generate && !s.file) throw InvalidParams("instances: entry has neither 'generate' nor 'file'");
            if (s.generate && (s.generate->n_tasks < 1 || s.generate->n_nodes < 1 ||
                               !(s.generate->heterogeneity >= 1.0))) {
                throw InvalidParams("instances.generate: need n_tasks >= 1, n_nodes >= 1, heterogeneity >= 1");
            }
        }
    };
    auto need_seeds = [&] {
        if (seeds.empty()) throw InvalidParams("seeds: at least one seed is required");
    };

    switch (mode) {
        case Mode::Compare:
        case Mode::SingleRun:
            need_instances();
            need_seeds();
            ga.validate();
            break;
        case Mode::GenInstance:
            need_instances();
            break;
        case Mode::Scaling:
            if (scaling.sizes_mb.empty()) throw InvalidParams("scaling.sizes_mb: must be nonempty");
            if (scaling.node_counts.empty()) throw InvalidParams("scaling.node_counts: must be nonempty");
            for (double s : scaling.sizes_mb) {
                if (!(s > 0.0)) throw InvalidParams("scaling.sizes_mb: sizes must be positive");
            }
            for (std::size_t k : scaling.node_counts) {
                if (k < 1) throw InvalidParams("scaling.node_counts: counts must be >= 1");
            }
            if (overhead) {
                try {
                    overhead->validate();
                } catch (const InvalidArgument& e) {
                    throw InvalidParams(std::string("overhead: ") + e.what());
                }
            }
            break;
        case Mode::Pipeline:
            if (pipeline.input_dir.empty()) throw InvalidParams("pipeline.input_dir: required");
            if (!pipeline.calibration) throw InvalidParams("pipeline.calibration: required");
            try {
                pipeline.calibration->validate();
            } catch (const InvalidArgument& e) {
                throw InvalidParams(std::string("pipeline.calibration: ") + e.what());
            }
            break;
    }
}

ExperimentConfig config_from_json(std::string_view text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidParams(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidParams("config: top level must be an object");

    ExperimentConfig cfg;
    if (doc.contains("mode")) cfg.mode = parse_mode(field<std::string>(doc, "config", "mode"));
    maybe(doc, "config", "seeds", cfg.seeds);
    if (doc.contains("out")) cfg.out_dir = resolve(base_dir, field<std::string>(doc, "config", "out"));
    maybe(doc, "config", "timing", cfg.timing);

    if (doc.contains("instances")) {
        for (const auto& e : doc.at("instances")) {
            InstanceSource src;
            if (e.contains("file")) src.file = resolve(base_dir, field<std::string>(e, "instances", "file"));
            if (e.contains("generate")) {
                const auto& g = e.at("generate");
                GeneratedInstance gi;
                maybe(g, "instances.generate", "n_tasks", gi.n_tasks);
                maybe(g, "instances.generate", "n_nodes", gi.n_nodes);
                maybe(g, "instances.generate", "heterogeneity", gi.heterogeneity);
                maybe(g, "instances.generate", "seed", gi.seed);
                src.generate = gi;
            }
            cfg.instances.push_back(std::move(src));
        }
    }

    if (doc.contains("ga")) cfg.ga = parse_ga(doc.at("ga"), cfg.ga);
    if (doc.contains("overhead")) cfg.overhead = parse_overhead(doc.at("overhead"));

    if (doc.contains("calibration")) {
        const auto& c = doc.at("calibration");
        const json& obs = c.contains("observations") ? c.at("observations") : json("reference");
        if (obs.is_string()) {
            if (obs.get<std::string>() != "reference") {
                throw InvalidParams("calibration.observations: expected \"reference\" or a list");
            }
            cfg.observations = reference_observations();
        } else {
            std::vector<Observation> list;
            for (const auto& row : obs) {
                if (!row.is_array() || row.size() != 3) {
                    throw InvalidParams("calibration.observations: rows are [size_mb, nodes, makespan_s]");
                }
                list.push_back({row[0].get<double>(), row[1].get<std::size_t>(), row[2].get<double>()});
            }
            cfg.observations = std::move(list);
        }
    }

    if (doc.contains("scaling")) {
        const auto& s = doc.at("scaling");
        maybe(s, "scaling", "sizes_mb", cfg.scaling.sizes_mb);
        maybe(s, "scaling", "node_counts", cfg.scaling.node_counts);
    }

    if (doc.contains("pipeline")) {
        const auto& p = doc.at("pipeline");
        if (p.contains("input_dir")) {
            cfg.pipeline.input_dir = resolve(base_dir, field<std::string>(p, "pipeline", "input_dir"));
        }
        maybe(p, "pipeline", "keep_day", cfg.pipeline.keep_day);
        if (p.contains("calibration")) {
            const auto& c = p.at("calibration");
            cfg.pipeline.calibration = sensor::Calibration{field<double>(c, "pipeline.calibration", "lambda0"),
                                                           field<double>(c, "pipeline.calibration", "slope"),
                                                           field<double>(c, "pipeline.calibration", "t0")};
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string(), "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str(), path.parent_path());
}

// ---------------------------------------------------------------------------

ComparisonReport run_compare(const ExperimentConfig& cfg) {
    cfg.validate();
    ComparisonReport report;
    std::map<std::string, std::vector<double>> makespans;
    std::map<std::string, double> workload_sums;

    for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
        const Instance inst = cfg.instances[i].load();
        const std::string label = label_of(i, cfg.instances[i]);
        const auto workloads = inst.workloads();

        std::optional<double> oracle;
        if (search_space_size(inst.n_tasks(), inst.n_nodes()) <= kCompareOracleLimit) {
            oracle = brute_force_optimum(inst).makespan;
        }

        for (std::uint64_t seed : cfg.seeds) {
            for (std::string_view name : kSchedulers) {
                const auto t0 = std::chrono::steady_clock::now();
                Chromosome c;
                if (name == "twlga" || name == "ga-time") {
                    GaParams p = cfg.ga;
                    p.seed = seed;
                    p.fitness_mode = name == "twlga" ? FitnessMode::Twlga : FitnessMode::TimeOnly;
                    c = evolve(inst, p).best;
                } else if (name == "fifo") {
                    c = schedule_fifo(inst);
                } else if (name == "random") {
                    c = schedule_random(inst, seed);
                } else {
                    c = schedule_round_robin(inst);
                }
                const auto t1 = std::chrono::steady_clock::now();

                const auto rep = fitness(c, inst.etc, workloads, FitnessMode::Twlga);
                ComparisonRow row;
                row.instance = label;
                row.seed = seed;
                row.scheduler = std::string(name);
                row.makespan = rep.job_final_time;
                row.bottleneck_node = rep.bottleneck_node + 1;
                row.bottleneck_workload = rep.bottleneck_workload;
                row.oracle_makespan = oracle;
                row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

                auto& s = report.summary[row.scheduler];
                ++s.runs;
                if (oracle && row.makespan == *oracle) ++s.oracle_hits;
                makespans[row.scheduler].push_back(row.makespan);
                workload_sums[row.scheduler] += row.bottleneck_workload;
                report.rows.push_back(std::move(row));
            }
        }
    }

    for (auto& [name, s] : report.summary) {
        const auto& v = makespans[name];
        double sum = 0.0;
        for (double m : v) sum += m;
        s.mean_makespan = sum / static_cast<double>(v.size());
        s.median_makespan = median(v);
        s.mean_bottleneck_workload = workload_sums[name] / static_cast<double>(v.size());
    }
    return report;
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report) {
    out << "instance,seed,scheduler,makespan_s,bottleneck_node,bottleneck_workload,oracle_makespan_s\n";
    for (const auto& r : report.rows) {
        out << r.instance << ',' << r.seed << ',' << r.scheduler << ',' << format_double(r.makespan) << ','
            << r.bottleneck_node << ',' << format_double(r.bottleneck_workload) << ','
            << (r.oracle_makespan ? format_double(*r.oracle_makespan) : std::string()) << '\n';
    }
}

// ---------------------------------------------------------------------------

std::size_t ScalingReport::matched() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [](const OrderingVerdict& v) { return v.matches; }));
}

std::string ScalingReport::verdict_line() const {
    return std::to_string(matched()) + "/" + std::to_string(verdicts.size()) + " rows match";
}

ScalingReport run_scaling(const ExperimentConfig& cfg) {
    cfg.validate();
    ScalingReport rep;

    const bool fixed_model = cfg.overhead && !cfg.observations;
    const std::vector<Observation> observations = cfg.observations.value_or(reference_observations());
    if (fixed_model) {
        rep.model = *cfg.overhead;
    } else {
        rep.calibration = calibrate(cfg.overhead.value_or(OverheadModel{}), observations);
        rep.model = rep.calibration->model;
    }

    rep.points = scaling_experiment(cfg.scaling.sizes_mb, cfg.scaling.node_counts, rep.model);

    std::vector<Observation> relevant;
    for (const auto& o : observations) {
        const bool size_in = std::find(cfg.scaling.sizes_mb.begin(), cfg.scaling.sizes_mb.end(), o.size_mb) !=
                             cfg.scaling.sizes_mb.end();
        const bool nodes_in = std::find(cfg.scaling.node_counts.begin(), cfg.scaling.node_counts.end(),
                                        o.nodes) != cfg.scaling.node_counts.end();
        if (size_in && nodes_in) relevant.push_back(o);
    }
    rep.verdicts = compare_orderings(rep.model, relevant);
    return rep;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingPoint>& points) {
    out << "size_mb,nodes,makespan_s\n";
    for (const auto& p : points) {
        out << format_double(p.size_mb) << ',' << p.nodes << ',' << format_double(p.makespan) << '\n';
    }
}

std::string calibration_json(const CalibrationReport& rep) {
    json j;
    j["startup"] = rep.model.startup;
    j["coordination"] = rep.model.coordination;
    j["transfer_rate"] = rate_json(rep.model.transfer_rate);
    j["compute_rate"] = rate_json(rep.model.compute_rate);
    j["residual"] = rep.residual;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::filesystem::path> trace_files(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw IoError(dir.string(), "input directory not found");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.is_regular_file()) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

PipelineSummary pipeline_impl(const ExperimentConfig& cfg, std::string* extracted_csv) {
    cfg.validate();
    const auto inputs = trace_files(cfg.pipeline.input_dir);
    PipelineSummary s;
    s.files_in = inputs.size();

    const auto merged_dir = cfg.out_dir / "merged";
    const auto merged = sensor::merge_by_year(inputs, merged_dir, &s.records_in);
    s.files_out = merged.size();

    std::vector<sensor::ExtractedRow> rows;
    for (const auto& [year, path] : merged) {
        auto part = sensor::extract(path, *cfg.pipeline.calibration, cfg.pipeline.keep_day);
        s.records_per_year[year] = part.size();
        s.records_out += part.size();
        rows.insert(rows.end(), part.begin(), part.end());
    }

    if (extracted_csv) {
        std::ostringstream ss;
        sensor::write_extracted_csv(ss, rows, cfg.pipeline.keep_day);
        *extracted_csv = ss.str();
    }
    return s;
}

}  // namespace

PipelineSummary run_pipeline(const ExperimentConfig& cfg) { return pipeline_impl(cfg, nullptr); }

EvolutionTrace run_single(const ExperimentConfig& cfg) {
    cfg.validate();
    GaParams p = cfg.ga;
    p.seed = cfg.seeds.front();
    return evolve(cfg.instances.front().load(), p);
}

// ---------------------------------------------------------------------------

std::string run_and_write(const ExperimentConfig& cfg) {
    cfg.validate();
    std::string headline;
    std::vector<std::pair<std::string, std::string>> files;  // name -> contents
    json summary;
    summary["mode"] = std::string(to_string(cfg.mode));

    switch (cfg.mode) {
        case Mode::Compare: {
            const auto report = run_compare(cfg);
            std::ostringstream csv;
            write_comparison_csv(csv, report);
            files.emplace_back("compare.csv", csv.str());
            if (cfg.timing) {
                std::ostringstream t;
                t << "instance,seed,scheduler,wall_ms\n";
                for (const auto& r : report.rows) {
                    t << r.instance << ',' << r.seed << ',' << r.scheduler << ',' << format_fixed(r.wall_ms, 3)
                      << '\n';
                }
                files.emplace_back("timings.csv", t.str());
            }
            summary["instances"] = cfg.instances.size();
            summary["seeds"] = cfg.seeds;
            summary["rows"] = report.rows.size();
            headline = std::to_string(report.rows.size()) + " comparison rows";
            for (const auto& [name, s] : report.summary) {
                summary["schedulers"][name] = {{"runs", s.runs},
                                               {"mean_makespan_s", s.mean_makespan},
                                               {"median_makespan_s", s.median_makespan},
                                               {"mean_bottleneck_workload", s.mean_bottleneck_workload},
                                               {"oracle_hits", s.oracle_hits}};
            }
            break;
        }
        case Mode::Scaling: {
            const auto rep = run_scaling(cfg);
            std::ostringstream csv;
            write_scaling_csv(csv, rep.points);
            files.emplace_back("scaling.csv", csv.str());
            if (rep.calibration) files.emplace_back("calibration.json", calibration_json(*rep.calibration));
            headline = rep.verdict_line();
            summary["verdict"] = headline;
            for (const auto& v : rep.verdicts) {
                summary["rows"].push_back({{"size_mb", v.size_mb}, {"matches", v.matches}});
            }
            summary["model"] = {{"startup", rep.model.startup},
                                {"coordination", rep.model.coordination},
                                {"transfer_rate", rate_json(rep.model.transfer_rate)},
                                {"compute_rate", rate_json(rep.model.compute_rate)}};
            break;
        }
        case Mode::Pipeline: {
            std::string csv;
            const auto s = pipeline_impl(cfg, &csv);
            files.emplace_back("extracted.csv", std::move(csv));
            summary["files_in"] = s.files_in;
            summary["files_out"] = s.files_out;
            summary["records_in"] = s.records_in;
            summary["records_out"] = s.records_out;
            headline = std::to_string(s.records_out) + " records from " + std::to_string(s.files_in) +
                       " files into " + std::to_string(s.files_out) + " yearly files";
            summary["records_per_year"] = json::object();
            for (const auto& [year, n] : s.records_per_year) summary["records_per_year"][std::to_string(year)] = n;
            break;
        }
        case Mode::SingleRun: {
            const auto trace = run_single(cfg);
            std::ostringstream csv;
            write_trace_csv(csv, trace);
            files.emplace_back("trace.csv", csv.str());
            summary["best_genes"] = trace.best.genes;
            summary["best_makespan_s"] = trace.best_report.job_final_time;
            summary["best_fitness"] = trace.best_report.optimum;
            summary["bottleneck_node"] = trace.best_report.bottleneck_node + 1;
            summary["bottleneck_workload"] = trace.best_report.bottleneck_workload;
            summary["fitness_mode"] = std::string(to_string(cfg.ga.fitness_mode));
            summary["seed"] = cfg.seeds.front();
            headline = "best makespan " + format_double(trace.best_report.job_final_time) + " s";
            break;
        }
        case Mode::GenInstance: {
            for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
                const std::string name =
                    cfg.instances.size() == 1 ? "instance.json" : "instance_" + std::to_string(i) + ".json";
                files.emplace_back(name, instance_to_json(cfg.instances[i].load()));
            }
            summary["instances"] = cfg.instances.size();
            headline = std::to_string(cfg.instances.size()) + " instance file(s)";
            break;
        }
    }

    files.emplace_back("summary.json", summary.dump(2) + "\n");

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError(cfg.out_dir.string(), "cannot create output directory: " + ec.message());
    for (const auto& [name, text] : files) write_text(cfg.out_dir / name, text);
    return headline;
}

}  // namespace twlga::experiment
