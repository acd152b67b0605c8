#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "dotweb/output.hpp"

using namespace dotweb;
using Catch::Matchers::WithinAbs;

namespace {

// minimal CSV reader for round-trip checks
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::string cur;
        for (char c : line) {
            if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("report record CSV round-trips exactly") {
    const SystemConfig cfg(5, 2);
    const auto rep = report(cfg, 0.8128374651234);
    const json rec = make_report_record(cfg, rep);

    std::ostringstream os;
    write_record(os, rec, Format::Csv);
    const auto rows = parse_csv(os.str());
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].size() == report_columns().size());
    CHECK(rows[0][0] == "theta");

    // every float cell re-parses to the identical double
    for (std::size_t i = 0; i < rows[1].size(); ++i) {
        const json& v = rec["rows"][0][i];
        if (v.is_null()) {
            CHECK(rows[1][i].empty());
        } else {
            CHECK(std::stod(rows[1][i]) == v.get<double>());
        }
    }
}

TEST_CASE("report record JSON round-trips exactly") {
    const SystemConfig cfg(3, 1);
    const json rec = make_report_record(cfg, report(cfg, 0.6981317007977318));
    std::ostringstream os;
    write_record(os, rec, Format::Json);
    const json parsed = json::parse(os.str());
    CHECK(parsed == rec);
    CHECK(parsed["schema_version"] == "1");
    CHECK(parsed["config"]["n"] == 3);
    // W-state time: the up-down concurrence sits near 2/3
    const double cud = parsed["rows"][0][3].get<double>();
    CHECK_THAT(cud, WithinAbs(2.0 / 3.0, 1e-3));
}

TEST_CASE("absent measures serialize as null and empty cell") {
    const SystemConfig cfg(4, 1); // no up-up pair
    const json rec = make_report_record(cfg, report(cfg, 0.4));
    CHECK(rec["rows"][0][2].is_null());
    std::ostringstream os;
    write_record(os, rec, Format::Csv);
    const auto rows = parse_csv(os.str());
    CHECK(rows[1][2].empty());
    CHECK(os.str().find("\r") == std::string::npos); // LF endings only
}

TEST_CASE("curve record carries the requested measures") {
    const SystemConfig cfg(2, 1);
    std::vector<EntanglementReport> reps;
    for (int i = 0; i <= 8; ++i) reps.push_back(report(cfg, i * 0.1));
    const json rec = make_curve_record(cfg, {"entropy", "c_ud"}, reps);
    REQUIRE(rec["columns"].size() == 3);
    CHECK(rec["columns"][2] == "c_ud");
    REQUIRE(rec["rows"].size() == 9);
}

TEST_CASE("fmt17 keeps doubles bit-exact") {
    for (double v : {0.1, 2.0 / 3.0, 1e-17, 123456.789012345678, 8.0 / 9.0})
        CHECK(std::stod(fmt17(v)) == v);
}
