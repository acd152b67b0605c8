#ifndef DOTWEB_OUTPUT_HPP
#define DOTWEB_OUTPUT_HPP

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dotweb/measures.hpp"
#include "dotweb/search.hpp"
#include "dotweb/table1_reference.hpp"

// Machine-readable output records.  Every record is a single JSON object
// with schema_version "1", a command echo, a fixed column list, and rows
// of values; the CSV rendering is the same columns and rows with LF line
// endings.  Floats carry 17 significant digits so round-trips are exact.

namespace dotweb {

using json = nlohmann::json;

enum class Format { Csv, Json };

inline constexpr const char* kSchemaVersion = "1";

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

inline const std::vector<std::string>& report_columns() {
    static const std::vector<std::string> cols = {"theta",   "entropy", "c_uu",    "c_ud",   "c_dd",
                                                  "tau_u",   "tau_d",   "delta_u", "delta_d"};
    return cols;
}

inline json report_row(const EntanglementReport& rep) {
    return json::array({rep.theta, rep.entropy, opt_json(rep.concurrence_upup), opt_json(rep.concurrence_updown),
                        opt_json(rep.concurrence_downdown), opt_json(rep.tangle_up), opt_json(rep.tangle_down),
                        opt_json(rep.residual_up), opt_json(rep.residual_down)});
}

inline json make_record(const std::string& command, const std::vector<std::string>& columns, json rows) {
    json rec;
    rec["schema_version"] = kSchemaVersion;
    rec["command"] = command;
    rec["columns"] = columns;
    rec["rows"] = std::move(rows);
    return rec;
}

inline json make_report_record(const SystemConfig& cfg, const EntanglementReport& rep,
                               const std::optional<EntanglementReport>& oracle_rep = std::nullopt) {
    auto cols = report_columns();
    json rows = json::array();
    rows.push_back(report_row(rep));
    if (oracle_rep) rows.push_back(report_row(*oracle_rep));
    json rec = make_record("report", cols, std::move(rows));
    rec["config"] = {{"n", cfg.n_dots}, {"m", cfg.m_up}};
    if (oracle_rep) rec["row_labels"] = json::array({"closed_form", "oracle"});
    return rec;
}

inline json make_curve_record(const SystemConfig& cfg, const std::vector<std::string>& measure_names,
                              const std::vector<EntanglementReport>& reps) {
    std::vector<std::string> cols = {"theta"};
    cols.insert(cols.end(), measure_names.begin(), measure_names.end());
    json rows = json::array();
    for (const auto& rep : reps) {
        json row = json::array({rep.theta});
        for (const auto& name : measure_names) {
            const auto m = measure_from_name(name);
            row.push_back(m ? opt_json(measure_from_report(rep, *m)) : json(nullptr));
        }
        rows.push_back(std::move(row));
    }
    json rec = make_record("curve", cols, std::move(rows));
    rec["config"] = {{"n", cfg.n_dots}, {"m", cfg.m_up}};
    return rec;
}

struct Table1Comparison {
    Table1Row computed;
    const Table1Reference* reference = nullptr; // null when the row is off-table
    bool pass = true;
};

inline json make_table1_record(const std::vector<Table1Comparison>& rows) {
    const std::vector<std::string> cols = {
        "n",          "m",          "c_uu",       "c_uu_ref",   "c_ud",        "c_ud_ref",  "c_dd",
        "c_dd_ref",   "tau_d",      "tau_d_ref",  "delta_u",    "delta_u_ref", "delta_d",   "delta_d_ref",
        "tau_u",      "pass"};
    json out_rows = json::array();
    for (const auto& c : rows) {
        auto ref = [&](double Table1Reference::* f) -> json {
            return c.reference ? json(c.reference->*f) : json(nullptr);
        };
        out_rows.push_back(json::array({c.computed.n_dots, c.computed.m_up,
                                        c.computed.c_uu.value, ref(&Table1Reference::max_c_uu),
                                        c.computed.c_ud.value, ref(&Table1Reference::max_c_ud),
                                        c.computed.c_dd.value, ref(&Table1Reference::max_c_dd),
                                        c.computed.tau_down.value, ref(&Table1Reference::max_tau_down),
                                        c.computed.delta_up.value, ref(&Table1Reference::max_delta_up),
                                        c.computed.delta_down.value, ref(&Table1Reference::max_delta_down),
                                        c.computed.tau_up.value, c.pass ? "PASS" : "FAIL"}));
    }
    json rec = make_record("table1", cols, std::move(out_rows));
    rec["tolerance"] = kTable1Tolerance;
    rec["reference_version"] = kTable1Version;
    return rec;
}

inline std::string value_to_csv(const json& v) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return fmt17(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline void write_csv(std::ostream& os, const json& rec) {
    const auto& cols = rec.at("columns");
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << cols[i].get<std::string>() << (i + 1 < cols.size() ? "," : "\n");
    for (const auto& row : rec.at("rows"))
        for (std::size_t i = 0; i < row.size(); ++i)
            os << value_to_csv(row[i]) << (i + 1 < row.size() ? "," : "\n");
}

inline void write_record(std::ostream& os, const json& rec, Format fmt) {
    if (fmt == Format::Json)
        os << rec.dump(2) << "\n";
    else
        write_csv(os, rec);
}

} // namespace dotweb

#endif
