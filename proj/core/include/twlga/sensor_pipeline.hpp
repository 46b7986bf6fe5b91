#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twlga::sensor {

/// One reading from a fiber-grating interrogator trace:
/// year month day hour minute wavelength [ignored trailing columns...]
struct SensorRecord {
    int year = 0;
    int month = 0;
    int day = 0;
    int hour = 0;
    int minute = 0;
    std::int64_t wavelength = 0;  ///< raw interrogator units

    auto operator<=>(const SensorRecord&) const = default;
};

/// Affine wavelength-to-temperature map: t = t0 + (w - lambda0) / slope.
struct Calibration {
    double lambda0 = 0.0;
    double slope = 0.0;  ///< raw units per degree Celsius; nonzero
    double t0 = 0.0;

    void validate() const;
};

struct ExtractedRow {
    int year = 0;
    int month = 0;
    std::optional<int> day;  ///< kept only on request
    int hour = 0;
    int minute = 0;
    double temp_c = 0.0;

    bool operator==(const ExtractedRow&) const = default;
};

/// Fields are separated by any run of spaces or tabs. Throws ParseError with
/// the given file name and line number on a missing, non-numeric or
/// out-of-range field.
SensorRecord parse_record(std::string_view line, std::string_view file = "<input>",
                          std::size_t line_no = 1);

/// Parses a whole trace. Blank lines and lines starting with '#' are skipped.
std::vector<SensorRecord> parse_trace(std::istream& in, std::string_view file = "<input>");
std::vector<SensorRecord> read_trace(const std::filesystem::path& path);

/// Canonical text form: zero-padded, tab-separated, no trailing columns.
std::string format_record(const SensorRecord& r);
void write_trace(std::ostream& out, const std::vector<SensorRecord>& records);

/// Merges the input traces into one file per year, `<out_dir>/<year>.txt`.
/// Records are ordered by (month, day, hour, minute), ties keeping input order
/// (files in the order given, lines in file order). Nothing is left in
/// `out_dir` if any input fails to read or parse. Returns year -> output path;
/// the number of records read is stored in `records_read` when given.
std::map<int, std::filesystem::path> merge_by_year(const std::vector<std::filesystem::path>& inputs,
                                                   const std::filesystem::path& out_dir,
                                                   std::size_t* records_read = nullptr);

double wavelength_to_temperature(double wavelength, const Calibration& cal);
double temperature_to_wavelength(double temp_c, const Calibration& cal);

/// One row per record, order preserved.
std::vector<ExtractedRow> extract(const std::vector<SensorRecord>& records, const Calibration& cal,
                                  bool keep_day = false);
std::vector<ExtractedRow> extract(const std::filesystem::path& merged_file, const Calibration& cal,
                                  bool keep_day = false);

/// CSV with header `year,month,hour,minute,temp_c` (plus `day` after month when kept).
void write_extracted_csv(std::ostream& out, const std::vector<ExtractedRow>& rows, bool keep_day = false);

}  // namespace twlga::sensor
