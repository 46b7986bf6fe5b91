#include "twlga/sensor_pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <tuple>

#include "twlga/csv.hpp"
#include "twlga/error.hpp"

namespace twlga::sensor {

namespace {

constexpr std::string_view kSeparators = " \t\r";

struct FieldSpec {
    const char* name;
    std::int64_t lo;
    std::int64_t hi;
};

constexpr FieldSpec kFields[] = {
    {"year", 1000, 9999}, {"month", 1, 12},  {"day", 1, 31},
    {"hour", 0, 23},      {"minute", 0, 59}, {"wavelength", 1, INT64_MAX},
};

bool skippable(std::string_view line) {
    const auto first = line.find_first_not_of(kSeparators);
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

void Calibration::validate() const {
    if (!(slope != 0.0) || !std::isfinite(slope) || !std::isfinite(lambda0) || !std::isfinite(t0)) {
        throw InvalidArgument("calibration needs finite lambda0/t0 and a nonzero finite slope");
    }
}

SensorRecord parse_record(std::string_view line, std::string_view file, std::size_t line_no) {
    std::int64_t values[6];
    std::size_t pos = 0;
    for (std::size_t col = 0; col < 6; ++col) {
        const auto begin = line.find_first_not_of(kSeparators, pos);
        if (begin == std::string_view::npos) {
            throw ParseError(std::string(file), line_no, col + 1,
                             std::string("missing field '") + kFields[col].name + "'");
        }
        auto end = line.find_first_of(kSeparators, begin);
        if (end == std::string_view::npos) end = line.size();
        const auto token = line.substr(begin, end - begin);

        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(std::string(file), line_no, col + 1,
                             std::string(kFields[col].name) + " '" + std::string(token) +
                                 "' is not an integer");
        }
        if (v < kFields[col].lo || v > kFields[col].hi) {
            throw ParseError(std::string(file), line_no, col + 1,
                             std::string(kFields[col].name) + " " + std::to_string(v) + " out of range");
        }
        values[col] = v;
        pos = end;
    }
    return SensorRecord{static_cast<int>(values[0]), static_cast<int>(values[1]),
                        static_cast<int>(values[2]), static_cast<int>(values[3]),
                        static_cast<int>(values[4]), values[5]};
}

std::vector<SensorRecord> parse_trace(std::istream& in, std::string_view file) {
    std::vector<SensorRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        out.push_back(parse_record(line, file, line_no));
    }
    if (in.bad()) throw IoError(std::string(file), "read failed");
    return out;
}

std::vector<SensorRecord> read_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path.string(), "cannot open trace file");
    return parse_trace(in, path.string());
}

std::string format_record(const SensorRecord& r) {
    char buf[96];
    const int n = std::snprintf(buf, sizeof buf, "%04d\t%02d\t%02d\t%02d\t%02d\t%lld", r.year, r.month,
                                r.day, r.hour, r.minute, static_cast<long long>(r.wavelength));
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_trace(std::ostream& out, const std::vector<SensorRecord>& records) {
    for (const auto& r : records) out << format_record(r) << '\n';
}

std::map<int, std::filesystem::path> merge_by_year(const std::vector<std::filesystem::path>& inputs,
                                                   const std::filesystem::path& out_dir,
                                                   std::size_t* records_read) {
    std::map<int, std::vector<SensorRecord>> by_year;
    std::size_t total = 0;
    for (const auto& path : inputs) {
        for (const auto& r : read_trace(path)) {
            by_year[r.year].push_back(r);
            ++total;
        }
    }
    if (records_read) *records_read = total;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError(out_dir.string(), "cannot create output directory: " + ec.message());

    std::map<int, std::filesystem::path> written;
    auto rollback = [&] {
        for (const auto& [year, p] : written) std::filesystem::remove(p, ec);
    };

    for (auto& [year, records] : by_year) {
        std::stable_sort(records.begin(), records.end(), [](const SensorRecord& a, const SensorRecord& b) {
            return std::tie(a.month, a.day, a.hour, a.minute) < std::tie(b.month, b.day, b.hour, b.minute);
        });
        const auto path = out_dir / (std::to_string(year) + ".txt");
        std::ofstream out(path, std::ios::binary);
        if (out) written.emplace(year, path);
        if (out) write_trace(out, records);
        if (!out) {
            rollback();
            throw IoError(path.string(), "cannot write merged trace");
        }
    }
    return written;
}

double wavelength_to_temperature(double wavelength, const Calibration& cal) {
    cal.validate();
    return cal.t0 + (wavelength - cal.lambda0) / cal.slope;
}

double temperature_to_wavelength(double temp_c, const Calibration& cal) {
    cal.validate();
    return cal.lambda0 + (temp_c - cal.t0) * cal.slope;
}

std::vector<ExtractedRow> extract(const std::vector<SensorRecord>& records, const Calibration& cal,
                                  bool keep_day) {
    cal.validate();
    std::vector<ExtractedRow> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        ExtractedRow row;
        row.year = r.year;
        row.month = r.month;
        if (keep_day) row.day = r.day;
        row.hour = r.hour;
        row.minute = r.minute;
        row.temp_c = wavelength_to_temperature(static_cast<double>(r.wavelength), cal);
        out.push_back(row);
    }
    return out;
}

std::vector<ExtractedRow> extract(const std::filesystem::path& merged_file, const Calibration& cal,
                                  bool keep_day) {
    return extract(read_trace(merged_file), cal, keep_day);
}

void write_extracted_csv(std::ostream& out, const std::vector<ExtractedRow>& rows, bool keep_day) {
    out << (keep_day ? "year,month,day,hour,minute,temp_c\n" : "year,month,hour,minute,temp_c\n");
    for (const auto& r : rows) {
        out << r.year << ',' << r.month << ',';
        if (keep_day) out << r.day.value_or(0) << ',';
        out << r.hour << ',' << r.minute << ',' << format_fixed(r.temp_c, 4) << '\n';
    }
}

}  // namespace twlga::sensor
