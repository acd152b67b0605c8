// Command-line front end: single-time reports, theta sweeps, the
// reference-maxima regression table, and the invariant suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dotweb/output.hpp"
#include "dotweb/parallel.hpp"
#include "dotweb/search.hpp"
#include "dotweb/validate.hpp"

namespace {

constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitComputationError = 3;

struct CommonOutput {
    std::string format = "csv";
    std::string out_file;
};

void add_output_flags(CLI::App* cmd, CommonOutput& out) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.out_file, "Write output to FILE instead of stdout");
}

int emit(const dotweb::json& rec, const CommonOutput& out) {
    const dotweb::Format fmt = out.format == "json" ? dotweb::Format::Json : dotweb::Format::Csv;
    if (out.out_file.empty()) {
        dotweb::write_record(std::cout, rec, fmt);
        return 0;
    }
    std::ofstream os(out.out_file, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << out.out_file << " for writing\n";
        return kExitComputationError;
    }
    dotweb::write_record(os, rec, fmt);
    return 0;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivalent-neighbor qubit dynamics and entanglement measures"};
    app.require_subcommand(1);

    // report
    auto* rep_cmd = app.add_subcommand("report", "All entanglement measures at a single time");
    int rep_n = 2, rep_m = 1;
    double rep_theta = 0.0;
    bool rep_oracle = false;
    CommonOutput rep_out;
    rep_cmd->add_option("--n", rep_n, "Number of dots N")->required();
    rep_cmd->add_option("--m", rep_m, "Number of initially-up dots M")->required();
    rep_cmd->add_option("--theta", rep_theta, "Dimensionless time theta = kappa*t")->required();
    rep_cmd->add_flag("--oracle", rep_oracle, "Append a brute-force cross-check row");
    add_output_flags(rep_cmd, rep_out);

    // curve
    auto* cur_cmd = app.add_subcommand("curve", "Measures on a theta grid");
    int cur_n = 2, cur_m = 1;
    double cur_theta_max = 0.0, cur_step = 0.0;
    std::string cur_measures;
    CommonOutput cur_out;
    cur_cmd->add_option("--n", cur_n, "Number of dots N")->required();
    cur_cmd->add_option("--m", cur_m, "Number of initially-up dots M")->required();
    cur_cmd->add_option("--theta-max", cur_theta_max, "Sweep end (default: one full period)");
    cur_cmd->add_option("--step", cur_step, "Theta increment (default: period/512)");
    cur_cmd->add_option("--measures", cur_measures,
                        "Comma list from entropy,c_uu,c_ud,c_dd,tau_u,tau_d,delta_u,delta_d (default: all)");
    add_output_flags(cur_cmd, cur_out);

    // table1
    auto* tab_cmd = app.add_subcommand("table1", "Reproduce the reference maxima table");
    std::vector<std::string> tab_rows;
    std::string tab_measure;
    int tab_grid = 4096;
    CommonOutput tab_out;
    tab_cmd->add_option("--rows", tab_rows, "Restrict to rows given as N,M (repeatable)");
    tab_cmd->add_option("--measure", tab_measure, "Restrict output to a single measure column");
    tab_cmd->add_option("--grid-points", tab_grid, "Coarse grid size before refinement")->check(CLI::PositiveNumber);
    add_output_flags(tab_cmd, tab_out);

    // validate
    auto* val_cmd = app.add_subcommand("validate", "Run the full invariant suite");
    CommonOutput val_out;
    add_output_flags(val_cmd, val_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsageError;
    }

    try {
        if (rep_cmd->parsed()) {
            const dotweb::SystemConfig cfg(rep_n, rep_m);
            const auto rep = dotweb::report(cfg, rep_theta);
            std::optional<dotweb::EntanglementReport> oracle_rep;
            if (rep_oracle) oracle_rep = dotweb::oracle_report(rep_n, rep_m, rep_theta);
            return emit(dotweb::make_report_record(cfg, rep, oracle_rep), rep_out);
        }

        if (cur_cmd->parsed()) {
            const dotweb::SystemConfig cfg(cur_n, cur_m);
            const double theta_max = cur_theta_max > 0.0 ? cur_theta_max : dotweb::default_theta_max(cfg);
            const double step = cur_step > 0.0 ? cur_step : theta_max / 512.0;
            if (cur_step < 0.0) {
                std::cerr << "error: --step must be positive\n";
                return kExitUsageError;
            }
            std::vector<std::string> names;
            if (cur_measures.empty()) {
                for (const auto& c : dotweb::report_columns())
                    if (c != "theta") names.push_back(c);
            } else {
                names = split_csv_list(cur_measures);
                for (const auto& n : names)
                    if (!dotweb::measure_from_name(n)) {
                        std::cerr << "error: unknown measure '" << n << "'\n";
                        return kExitUsageError;
                    }
            }
            std::vector<dotweb::EntanglementReport> reps;
            for (double th = 0.0; th <= theta_max + 0.5 * step; th += step)
                reps.push_back(dotweb::report(cfg, th));
            return emit(dotweb::make_curve_record(cfg, names, reps), cur_out);
        }

        if (tab_cmd->parsed()) {
            std::vector<std::pair<int, int>> rows;
            if (tab_rows.empty()) {
                for (const auto& ref : dotweb::kTable1Reference) rows.emplace_back(ref.n_dots, ref.m_up);
            } else {
                for (const auto& spec : tab_rows) {
                    const auto parts = split_csv_list(spec);
                    if (parts.size() != 2) {
                        std::cerr << "error: --rows expects N,M\n";
                        return kExitUsageError;
                    }
                    rows.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
                }
            }
            if (!tab_measure.empty() && !dotweb::measure_from_name(tab_measure)) {
                std::cerr << "error: unknown measure '" << tab_measure << "'\n";
                return kExitUsageError;
            }

            std::vector<dotweb::Table1Comparison> comparisons(rows.size());
            dotweb::parallel_for(rows.size(), [&](std::size_t i) {
                dotweb::Table1Comparison c;
                c.computed = dotweb::table1_row(rows[i].first, rows[i].second, tab_grid);
                for (const auto& ref : dotweb::kTable1Reference)
                    if (ref.n_dots == rows[i].first && ref.m_up == rows[i].second) c.reference = &ref;
                if (c.reference) {
                    const double tol = dotweb::kTable1Tolerance;
                    c.pass = std::abs(c.computed.c_uu.value - c.reference->max_c_uu) <= tol &&
                             std::abs(c.computed.c_ud.value - c.reference->max_c_ud) <= tol &&
                             std::abs(c.computed.c_dd.value - c.reference->max_c_dd) <= tol &&
                             std::abs(c.computed.tau_down.value - c.reference->max_tau_down) <= tol &&
                             std::abs(c.computed.delta_up.value - c.reference->max_delta_up) <= tol &&
                             std::abs(c.computed.delta_down.value - c.reference->max_delta_down) <= tol;
                }
                comparisons[i] = c;
            });

            dotweb::json rec;
            if (tab_measure.empty()) {
                rec = dotweb::make_table1_record(comparisons);
            } else {
                dotweb::json out_rows = dotweb::json::array();
                for (const auto& c : comparisons) {
                    const dotweb::ExtremumResult* r = nullptr;
                    if (tab_measure == "c_uu") r = &c.computed.c_uu;
                    else if (tab_measure == "c_ud") r = &c.computed.c_ud;
                    else if (tab_measure == "c_dd") r = &c.computed.c_dd;
                    else if (tab_measure == "tau_u") r = &c.computed.tau_up;
                    else if (tab_measure == "tau_d") r = &c.computed.tau_down;
                    else if (tab_measure == "delta_u") r = &c.computed.delta_up;
                    else if (tab_measure == "delta_d") r = &c.computed.delta_down;
                    if (!r) {
                        std::cerr << "error: measure '" << tab_measure << "' has no maxima column\n";
                        return kExitUsageError;
                    }
                    out_rows.push_back(dotweb::json::array(
                        {c.computed.n_dots, c.computed.m_up, r->value, r->theta_star}));
                }
                rec = dotweb::make_record("table1", {"n", "m", tab_measure, "theta_star"}, std::move(out_rows));
            }

            const int rc = emit(rec, tab_out);
            if (rc != 0) return rc;
            for (const auto& c : comparisons)
                if (!c.pass) return kExitValidationFailure;
            return 0;
        }

        if (val_cmd->parsed()) {
            const auto results = dotweb::run_validation();
            if (val_out.format == "json" || !val_out.out_file.empty()) {
                dotweb::json rows = dotweb::json::array();
                for (const auto& r : results)
                    rows.push_back(dotweb::json::array({r.name, r.pass ? "PASS" : "FAIL", r.detail}));
                const int rc = emit(dotweb::make_record("validate", {"check", "result", "detail"}, std::move(rows)),
                                    val_out);
                if (rc != 0) return rc;
            } else {
                for (const auto& r : results)
                    std::cout << "check " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail
                              << ")\n";
                for (const auto& r : results) {
                    if (r.name == "epr_reachability" && r.pass)
                        std::cout << "EPR reachable: N=2..6 yes, N=7..10 no\n";
                    if (r.name == "monogamy" && r.pass) std::cout << "monogamy violations: 0\n";
                    if (r.name == "residuals_vanish_m1")
                        std::cout << "Delta^{N1} == 0: " << (r.pass ? "PASS" : "FAIL") << "\n";
                }
            }
            return dotweb::all_passed(results) ? 0 : kExitValidationFailure;
        }
    } catch (const dotweb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputationError;
    }
    return 0;
}
