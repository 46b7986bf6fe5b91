#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twlga/calibration.hpp"
#include "twlga/cluster_sim.hpp"
#include "twlga/evolve.hpp"
#include "twlga/ga_params.hpp"
#include "twlga/sensor_pipeline.hpp"
#include "twlga/task_model.hpp"

namespace twlga::experiment {

enum class Mode { Compare, Scaling, Pipeline, SingleRun, GenInstance };

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

struct GeneratedInstance {
    std::size_t n_tasks = 8;
    std::size_t n_nodes = 3;
    double heterogeneity = 4.0;
    std::uint64_t seed = 1;
};

/// Either generator parameters or a path to an instance JSON file.
struct InstanceSource {
    std::optional<GeneratedInstance> generate;
    std::optional<std::filesystem::path> file;

    std::string label() const;
    Instance load() const;
};

struct ScalingConfig {
    std::vector<double> sizes_mb{kReferenceSizesMb.begin(), kReferenceSizesMb.end()};
    std::vector<std::size_t> node_counts{kReferenceNodeCounts.begin(), kReferenceNodeCounts.end()};
};

struct PipelineConfig {
    std::filesystem::path input_dir;
    std::optional<sensor::Calibration> calibration;
    bool keep_day = false;
};

struct ExperimentConfig {
    Mode mode = Mode::Compare;
    std::vector<InstanceSource> instances;
    GaParams ga;
    std::vector<std::uint64_t> seeds;
    std::filesystem::path out_dir = "out";

    /// Scaling: fixed model, or starting point when calibrating.
    std::optional<OverheadModel> overhead;
    /// Scaling: observations to calibrate against; the reference table when
    /// unset and no fixed model is given.
    std::optional<std::vector<Observation>> observations;
    ScalingConfig scaling;

    PipelineConfig pipeline;

    /// Writes wall-clock timings to timings.csv. Off by default so reruns
    /// stay byte-identical.
    bool timing = false;

    /// Throws InvalidParams with the offending field name.
    void validate() const;
};

/// Parses a JSON experiment manifest. Relative paths inside it are resolved
/// against `base_dir`.
ExperimentConfig config_from_json(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// compare

inline constexpr std::string_view kSchedulers[] = {"twlga", "ga-time", "fifo", "random", "round-robin"};

struct ComparisonRow {
    std::string instance;
    std::uint64_t seed = 0;
    std::string scheduler;
    double makespan = 0.0;
    std::size_t bottleneck_node = 0;  ///< 1-based, like genes
    double bottleneck_workload = 0.0;
    std::optional<double> oracle_makespan;  ///< present when brute force is affordable
    double wall_ms = 0.0;
};

struct SchedulerSummary {
    std::size_t runs = 0;
    double mean_makespan = 0.0;
    double median_makespan = 0.0;
    double mean_bottleneck_workload = 0.0;
    std::size_t oracle_hits = 0;  ///< runs whose makespan equals the oracle
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;  ///< ordered by instance, seed, scheduler
    std::map<std::string, SchedulerSummary> summary;
};

/// Search spaces up to this size get an oracle column.
inline constexpr std::uint64_t kCompareOracleLimit = 1'000'000;

ComparisonReport run_compare(const ExperimentConfig& cfg);
void write_comparison_csv(std::ostream& out, const ComparisonReport& report);

// ---------------------------------------------------------------------------
// scaling

struct ScalingReport {
    OverheadModel model;
    std::optional<CalibrationReport> calibration;
    std::vector<ScalingPoint> points;
    std::vector<OrderingVerdict> verdicts;

    std::size_t matched() const noexcept;
    std::string verdict_line() const;
};

ScalingReport run_scaling(const ExperimentConfig& cfg);
void write_scaling_csv(std::ostream& out, const std::vector<ScalingPoint>& points);
std::string calibration_json(const CalibrationReport& rep);

// ---------------------------------------------------------------------------
// pipeline

struct PipelineSummary {
    std::size_t files_in = 0;
    std::size_t records_in = 0;
    std::map<int, std::size_t> records_per_year;
    std::size_t files_out = 0;
    std::size_t records_out = 0;
};

PipelineSummary run_pipeline(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// single run

EvolutionTrace run_single(const ExperimentConfig& cfg);

/// Runs `cfg.mode` and writes its artifacts under cfg.out_dir: CSV files and
/// summary.json. Outputs are written only after the whole run succeeded.
/// Returns a one-line human-readable result.
std::string run_and_write(const ExperimentConfig& cfg);

}  // namespace twlga::experiment
