#ifndef DOTWEB_SEARCH_HPP
#define DOTWEB_SEARCH_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dotweb/measures.hpp"
#include "dotweb/table1_reference.hpp"

// Maxima of the entanglement measures over theta: a dense coarse grid
// followed by golden-section refinement.  All phase exponents of the
// closed form are integers, so every measure is 2*pi periodic; for
// M' <= 1 the period shrinks to 2*pi/N.

namespace dotweb {

enum class Measure {
    Entropy,
    ConcurrenceUpUp,
    ConcurrenceUpDown,
    ConcurrenceDownDown,
    TangleUp,
    TangleDown,
    ResidualUp,
    ResidualDown,
};

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::Entropy: return "entropy";
        case Measure::ConcurrenceUpUp: return "c_uu";
        case Measure::ConcurrenceUpDown: return "c_ud";
        case Measure::ConcurrenceDownDown: return "c_dd";
        case Measure::TangleUp: return "tau_u";
        case Measure::TangleDown: return "tau_d";
        case Measure::ResidualUp: return "delta_u";
        case Measure::ResidualDown: return "delta_d";
    }
    return "?";
}

inline std::optional<Measure> measure_from_name(const std::string& s) {
    for (Measure m : {Measure::Entropy, Measure::ConcurrenceUpUp, Measure::ConcurrenceUpDown,
                      Measure::ConcurrenceDownDown, Measure::TangleUp, Measure::TangleDown,
                      Measure::ResidualUp, Measure::ResidualDown})
        if (s == measure_name(m)) return m;
    return std::nullopt;
}

inline std::optional<double> measure_from_report(const EntanglementReport& rep, Measure m) {
    switch (m) {
        case Measure::Entropy: return rep.entropy;
        case Measure::ConcurrenceUpUp: return rep.concurrence_upup;
        case Measure::ConcurrenceUpDown: return rep.concurrence_updown;
        case Measure::ConcurrenceDownDown: return rep.concurrence_downdown;
        case Measure::TangleUp: return rep.tangle_up;
        case Measure::TangleDown: return rep.tangle_down;
        case Measure::ResidualUp: return rep.residual_up;
        case Measure::ResidualDown: return rep.residual_down;
    }
    return std::nullopt;
}

inline double default_theta_max(const SystemConfig& cfg) {
    if (cfg.m_prime() <= 1) return 2.0 * std::numbers::pi / cfg.n_dots;
    return 2.0 * std::numbers::pi;
}

struct ScanSpec {
    SystemConfig config;
    Measure measure = Measure::Entropy;
    double theta_max = 0.0; // <= 0 means one full period
    int grid_points = 4096;
    double refine_tol = 1e-10;
};

struct ExtremumResult {
    double theta_star = 0.0;
    double value = 0.0;
    Measure measure = Measure::Entropy;
    bool refined = false;
};

// Evaluate a single measure; throws if it does not apply to the config.
inline double evaluate_measure(const SystemConfig& cfg, Measure m, double theta) {
    const auto rep = report(cfg, theta);
    const auto v = measure_from_report(rep, m);
    if (!v) throw InvalidSpin(std::string("measure ") + measure_name(m) + " is undefined for this config");
    return *v;
}

namespace detail {

// Golden-section maximization on [lo, hi]; the bracket comes from the
// coarse grid, so unimodality holds locally.
inline ExtremumResult golden_refine(const std::function<double(double)>& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    ExtremumResult r;
    r.theta_star = 0.5 * (a + b);
    r.value = f(r.theta_star);
    r.refined = true;
    return r;
}

} // namespace detail

inline ExtremumResult scan(const ScanSpec& spec) {
    if (spec.grid_points < 16) throw Error("scan: grid_points must be >= 16");
    const double theta_max = spec.theta_max > 0.0 ? spec.theta_max : default_theta_max(spec.config);

    auto f = [&](double theta) { return evaluate_measure(spec.config, spec.measure, theta); };

    int best = 0;
    double best_val = f(0.0);
    const double h = theta_max / spec.grid_points;
    for (int i = 1; i <= spec.grid_points; ++i) {
        const double v = f(i * h);
        if (v > best_val) { // strict: ties resolve to the smallest theta
            best_val = v;
            best = i;
        }
    }

    const double lo = std::max(0.0, (best - 1) * h);
    const double hi = std::min(theta_max, (best + 1) * h);
    ExtremumResult r = detail::golden_refine(f, lo, hi, spec.refine_tol);
    if (r.value < best_val) { // refinement may never lose to the grid
        r.theta_star = best * h;
        r.value = best_val;
    }
    r.measure = spec.measure;
    return r;
}

// Analytic extremum times of the entropy for M = 1, within one period
// T = 2*pi/N: t'' = pi/N always; both branches of
// t' = +-(2/N) arccsc((2/N) sqrt(2(N-1))) when the argument allows a
// real solution (N <= 6).
inline std::vector<double> analytic_times_m1(int N) {
    if (N < 2) throw Error("analytic_times_m1: N must be >= 2");
    const double T = 2.0 * std::numbers::pi / N;
    std::vector<double> times;
    const double arg = (2.0 / N) * std::sqrt(2.0 * (N - 1.0));
    if (arg >= 1.0) {
        const double tp = (2.0 / N) * std::asin(1.0 / arg);
        times.push_back(tp);
        times.push_back(T - tp); // the negative branch shifted into [0, T)
    }
    times.push_back(std::numbers::pi / N); // t''
    std::sort(times.begin(), times.end());
    return times;
}

// True iff a maximally entangled pairwise split (1 ebit) is reachable
// for M = 1; the sector scan is the arbiter.
inline bool epr_reachable(int N) {
    ScanSpec spec;
    spec.config = SystemConfig(N, 1);
    spec.measure = Measure::Entropy;
    const ExtremumResult r = scan(spec);
    return r.value >= 1.0 - 1e-9;
}

struct Table1Row {
    int n_dots;
    int m_up;
    ExtremumResult c_uu, c_ud, c_dd, tau_up, tau_down, delta_up, delta_down;
};

// All Table-I style maxima for one (N, M).  A single grid pass feeds
// every measure; each maximum is then golden-refined separately.
// Values below 1e-12 are structural zeros and reported as exact 0.
inline Table1Row table1_row(int N, int M, int grid_points = 4096, double refine_tol = 1e-10) {
    const SystemConfig cfg(N, M);
    const double theta_max = default_theta_max(cfg);
    const double h = theta_max / grid_points;

    const std::vector<Measure> measures = {
        Measure::ConcurrenceUpUp, Measure::ConcurrenceUpDown, Measure::ConcurrenceDownDown,
        Measure::TangleUp,        Measure::TangleDown,        Measure::ResidualUp,
        Measure::ResidualDown};

    std::vector<int> best_idx(measures.size(), 0);
    std::vector<double> best_val(measures.size(), -1.0);
    for (int i = 0; i <= grid_points; ++i) {
        const auto rep = report(cfg, i * h);
        for (std::size_t j = 0; j < measures.size(); ++j) {
            const auto v = measure_from_report(rep, measures[j]);
            if (v && *v > best_val[j]) {
                best_val[j] = *v;
                best_idx[j] = i;
            }
        }
    }

    auto refine = [&](std::size_t j) {
        auto f = [&](double theta) { return evaluate_measure(cfg, measures[j], theta); };
        const double lo = std::max(0.0, (best_idx[j] - 1) * h);
        const double hi = std::min(theta_max, (best_idx[j] + 1) * h);
        ExtremumResult r = detail::golden_refine(f, lo, hi, refine_tol);
        if (r.value < best_val[j]) {
            r.theta_star = best_idx[j] * h;
            r.value = best_val[j];
        }
        if (r.value < 1e-12) r.value = 0.0;
        r.measure = measures[j];
        return r;
    };

    Table1Row row;
    row.n_dots = N;
    row.m_up = M;
    row.c_uu = refine(0);
    row.c_ud = refine(1);
    row.c_dd = refine(2);
    row.tau_up = refine(3);
    row.tau_down = refine(4);
    row.delta_up = refine(5);
    row.delta_down = refine(6);
    return row;
}

} // namespace dotweb

#endif
