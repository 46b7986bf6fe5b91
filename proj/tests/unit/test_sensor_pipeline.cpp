#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "twlga/error.hpp"
#include "twlga/sensor_pipeline.hpp"

using namespace twlga;
using namespace twlga::sensor;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("twlga_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

const Calibration kCal{154574, 10, 25};

}  // namespace

TEST_CASE("parse_record: first and last reference rows") {
    CHECK(parse_record("2021 03 01 08 30 154574") == SensorRecord{2021, 3, 1, 8, 30, 154574});
    CHECK(parse_record("2021\t03\t01\t11\t20\t154593") == SensorRecord{2021, 3, 1, 11, 20, 154593});
    CHECK(parse_record("  2021 03   01\t 08 30 154574 0.12 extra\r") == SensorRecord{2021, 3, 1, 8, 30, 154574});
}

TEST_CASE("parse_record: range and format errors name line and column") {
    try {
        parse_record("2021 13 01 08 30 154574", "a.txt", 7);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.file() == "a.txt");
        CHECK(e.line() == 7);
        CHECK(e.column() == 2);
    }
    CHECK_THROWS_AS(parse_record("2021 03 01 24 30 154574"), ParseError);
    CHECK_THROWS_AS(parse_record("2021 03 01 08 60 154574"), ParseError);
    CHECK_THROWS_AS(parse_record("2021 03 00 08 30 154574"), ParseError);
    CHECK_THROWS_AS(parse_record("2021 03 01 08 30 0"), ParseError);
    CHECK_THROWS_AS(parse_record("21 03 01 08 30 154574"), ParseError);
    CHECK_THROWS_AS(parse_record("2021 03 01 08 30"), ParseError);
    CHECK_THROWS_AS(parse_record("2021 03 01 08 3O 154574"), ParseError);
}

TEST_CASE("parse_trace skips blanks and comments, counts physical lines") {
    std::istringstream in("# header\n\n2021 03 01 08 30 154574\n2021 03 01 08 31 bad\n");
    try {
        parse_trace(in, "t.txt");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() == 6);
    }
}

TEST_CASE("wavelength_to_temperature: affine map") {
    CHECK(wavelength_to_temperature(154574, kCal) == 25.0);
    CHECK(wavelength_to_temperature(154594, kCal) == doctest::Approx(27.0).epsilon(1e-12));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> w(150000, 160000);
    for (int i = 0; i < 1000; ++i) {
        const double a = w(rng), b = w(rng);
        CHECK(std::abs(temperature_to_wavelength(wavelength_to_temperature(a, kCal), kCal) - a) < 1e-9);
        CHECK(wavelength_to_temperature(a, kCal) - wavelength_to_temperature(b, kCal) ==
              doctest::Approx((a - b) / kCal.slope).epsilon(1e-9));
    }
    CHECK_THROWS_AS(wavelength_to_temperature(1, Calibration{0, 0, 0}), InvalidArgument);
}

TEST_CASE("extract: reference first row, empty input, per-record map") {
    const auto rows = extract(std::vector<SensorRecord>{{2021, 3, 1, 8, 30, 154574}}, kCal);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == ExtractedRow{2021, 3, std::nullopt, 8, 30, 25.0});
    CHECK(extract(std::vector<SensorRecord>{}, kCal).empty());

    std::vector<SensorRecord> recs{{2021, 3, 1, 8, 30, 154574}, {2020, 1, 2, 0, 0, 154600}};
    auto fwd = extract(recs, kCal, true);
    std::swap(recs[0], recs[1]);
    auto rev = extract(recs, kCal, true);
    CHECK(fwd[0] == rev[1]);
    CHECK(fwd[1] == rev[0]);
    CHECK(fwd[0].day == 1);
}

TEST_CASE("extracted CSV header and format") {
    std::ostringstream ss;
    write_extracted_csv(ss, extract(std::vector<SensorRecord>{{2021, 3, 1, 8, 30, 154574}}, kCal));
    CHECK(ss.str() == "year,month,hour,minute,temp_c\n2021,3,8,30,25.0000\n");
}

TEST_CASE("merge_by_year: conservation, partition and ordering") {
    TempDir dir("merge_basic");
    write_file(dir.path / "a.txt", "2021 03 01 08 31 3\n2021 03 01 08 30 1\n2020 12 31 23 59 9\n");
    write_file(dir.path / "b.txt",
               "2021 03 01 08 30 2\n2021 01 05 00 00 4\n2021 03 01 08 31 5\n2020 01 01 00 00 8\n2021 02 01 00 00 6\n");
    const auto out = merge_by_year({dir.path / "a.txt", dir.path / "b.txt"}, dir.path / "out");
    REQUIRE(out.size() == 2);
    const auto y2021 = read_trace(out.at(2021));
    const auto y2020 = read_trace(out.at(2020));
    CHECK(y2021.size() + y2020.size() == 8);
    std::vector<std::int64_t> order;
    for (const auto& r : y2021) order.push_back(r.wavelength);
    // (month, day, hour, minute) then input order: a.txt before b.txt.
    CHECK(order == std::vector<std::int64_t>{4, 6, 1, 2, 3, 5});
    CHECK(y2020.front().wavelength == 8);
}

TEST_CASE("merge_by_year: same-year files concatenate") {
    TempDir dir("merge_same");
    write_file(dir.path / "a.txt", "2021 03 01 08 30 1\n2021 03 01 08 31 2\n2021 03 01 08 32 3\n");
    std::string b;
    for (int i = 0; i < 5; ++i) b += "2021 04 01 08 3" + std::to_string(i) + " 10\n";
    write_file(dir.path / "b.txt", b);
    std::size_t read = 0;
    const auto out = merge_by_year({dir.path / "a.txt", dir.path / "b.txt"}, dir.path / "out", &read);
    REQUIRE(out.size() == 1);
    CHECK(read_trace(out.at(2021)).size() == 8);
    CHECK(read == 8);
}

TEST_CASE("merge_by_year: random traces round-trip as a multiset") {
    TempDir dir("merge_random");
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> year(2019, 2021), month(1, 12), day(1, 28), hour(0, 23), minute(0, 59);
    std::uniform_int_distribution<std::int64_t> wl(154000, 156000);
    std::vector<SensorRecord> all;
    std::vector<fs::path> files;
    for (int f = 0; f < 6; ++f) {
        std::vector<SensorRecord> recs;
        for (int i = 0; i < 300; ++i) {
            recs.push_back({year(rng), month(rng), day(rng), hour(rng), minute(rng), wl(rng)});
        }
        files.push_back(dir.path / ("f" + std::to_string(f) + ".txt"));
        std::ofstream out(files.back());
        write_trace(out, recs);
        all.insert(all.end(), recs.begin(), recs.end());
    }
    const auto merged = merge_by_year(files, dir.path / "out");
    std::vector<SensorRecord> back;
    for (const auto& [y, p] : merged) {
        for (const auto& r : read_trace(p)) {
            CHECK(r.year == y);
            back.push_back(r);
        }
    }
    std::sort(all.begin(), all.end());
    std::sort(back.begin(), back.end());
    CHECK(back == all);
}

TEST_CASE("merge_by_year: a corrupt file aborts without leaving outputs") {
    TempDir dir("merge_corrupt");
    write_file(dir.path / "a.txt", "2021 03 01 08 30 1\n");
    write_file(dir.path / "b.txt", "2020 03 01 08 30 1\n2020 03 41 08 30 1\n");
    try {
        merge_by_year({dir.path / "a.txt", dir.path / "b.txt"}, dir.path / "out");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.file().find("b.txt") != std::string::npos);
    }
    CHECK((!fs::exists(dir.path / "out") || fs::is_empty(dir.path / "out")));
    CHECK_THROWS_AS(merge_by_year({dir.path / "missing.txt"}, dir.path / "out"), IoError);
}
