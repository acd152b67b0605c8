#ifndef DOTWEB_VALIDATE_HPP
#define DOTWEB_VALIDATE_HPP

#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dotweb/oracle.hpp"
#include "dotweb/output.hpp"
#include "dotweb/parallel.hpp"
#include "dotweb/search.hpp"

// The cross-cutting invariant suite: normalization, symmetry,
// periodicity, printed closed forms, monogamy, oracle equivalence and
// EPR reachability, over the full (N, M) test grid.

namespace dotweb {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ValidationOptions {
    int max_n = 12;        // grid bound for the cheap sector checks
    int max_n_oracle = 10; // grid bound for brute-force equivalence
    int thetas_random = 100;
    int thetas_oracle = 25;
    unsigned seed = 20240917;
};

namespace detail {

inline double max_abs_gap(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value()) return 1.0; // presence mismatch is a failure
    if (!a) return 0.0;
    return std::abs(*a - *b);
}

} // namespace detail

inline std::vector<CheckResult> run_validation(const ValidationOptions& opt = {}) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        results.push_back({name, pass, detail});
    };

    // normalization of the Schmidt spectrum, plus the renormalization flag
    {
        double worst = 0.0;
        bool flagged = false;
        for (int N = 1; N <= opt.max_n; ++N)
            for (int M = 0; M <= N; ++M)
                for (int t = 0; t < opt.thetas_random; ++t) {
                    const auto st = evolve(SystemConfig(N, M), u(rng));
                    flagged = flagged || st.renormalized;
                    const auto sp = schmidt(st);
                    double sum = 0.0;
                    for (double p : sp.probs) sum += p;
                    worst = std::max(worst, std::abs(sum - 1.0));
                }
        record("normalization", worst <= 1e-10 && !flagged,
               "max |sum P - 1| = " + fmt17(worst) + (flagged ? ", renormalization triggered" : ""));
    }

    // P_m^{N,M} = P_m^{N,N-M}
    {
        double worst = 0.0;
        for (int N = 2; N <= opt.max_n; ++N)
            for (int M = 0; M <= N / 2; ++M)
                for (int t = 0; t < 20; ++t) {
                    const double theta = u(rng);
                    const auto a = schmidt(evolve(SystemConfig(N, M), theta));
                    const auto b = schmidt(evolve(SystemConfig(N, N - M), theta));
                    for (std::size_t m = 0; m < a.probs.size(); ++m)
                        worst = std::max(worst, std::abs(a.probs[m] - b.probs[m]));
                }
        record("schmidt_m_symmetry", worst <= 1e-10, "max gap = " + fmt17(worst));
    }

    // 2*pi/N periodicity of the M = 1 spectra
    {
        double worst = 0.0;
        for (int N = 2; N <= opt.max_n; ++N)
            for (int t = 0; t < 20; ++t) {
                const double theta = u(rng);
                const auto a = schmidt(evolve(SystemConfig(N, 1), theta));
                const auto b = schmidt(evolve(SystemConfig(N, 1), theta + 2.0 * std::numbers::pi / N));
                for (std::size_t m = 0; m < a.probs.size(); ++m)
                    worst = std::max(worst, std::abs(a.probs[m] - b.probs[m]));
            }
        record("periodicity_m1", worst <= 1e-10, "max gap = " + fmt17(worst));
    }

    // printed closed forms of the coefficients for (2,1), (3,1), (4,2)
    {
        double worst = 0.0;
        for (int t = 0; t < opt.thetas_random; ++t) {
            const double th = u(rng);
            const Complex i(0.0, 1.0);
            {
                const auto st = evolve(SystemConfig(2, 1), th);
                worst = std::max(worst, std::abs(st.gamma[0] - std::cos(th)));
                worst = std::max(worst, std::abs(st.gamma[1] - (-i * std::sin(th))));
            }
            {
                const auto st = evolve(SystemConfig(3, 1), th);
                worst = std::max(worst, std::abs(st.gamma[0] - (std::exp(-2.0 * i * th) + 2.0 * std::exp(i * th)) / 3.0));
                worst = std::max(worst, std::abs(st.gamma[1] - (std::exp(-2.0 * i * th) - std::exp(i * th)) / 3.0));
            }
            {
                const auto st = evolve(SystemConfig(4, 2), th);
                const Complex a = (std::exp(-4.0 * i * th) + 2.0 * std::exp(2.0 * i * th)) / 6.0;
                const Complex b = (std::exp(-4.0 * i * th) - std::exp(2.0 * i * th)) / 6.0;
                worst = std::max(worst, std::abs(st.gamma[0] - (a + 0.5)));
                worst = std::max(worst, std::abs(st.gamma[1] - b));
                worst = std::max(worst, std::abs(st.gamma[2] - (a - 0.5)));
            }
        }
        record("closed_form_gamma", worst <= 1e-10, "max gap = " + fmt17(worst));
    }

    // explicit tangle solutions and tangle/concurrence identities, M = 1
    {
        double worst = 0.0;
        for (int t = 0; t < opt.thetas_random; ++t) {
            const double th = u(rng);
            {
                const auto rep = report(SystemConfig(3, 1), th);
                const double tp = (16.0 / 81.0) * std::pow(std::sin(1.5 * th), 2);
                worst = std::max(worst, std::abs(*rep.tangle_down - tp * (7.0 + 2.0 * std::cos(3.0 * th))));
                worst = std::max(worst, std::abs(*rep.tangle_up - 2.0 * tp * (5.0 + 4.0 * std::cos(3.0 * th))));
                const double cud = *rep.concurrence_updown, cdd = *rep.concurrence_downdown;
                worst = std::max(worst, std::abs(*rep.tangle_down - (cud * cud + cdd * cdd)));
                worst = std::max(worst, std::abs(*rep.tangle_up - 2.0 * cud * cud));
            }
            {
                const auto rep = report(SystemConfig(4, 1), th);
                const double tp = 0.125 * std::pow(std::sin(2.0 * th), 2);
                worst = std::max(worst, std::abs(*rep.tangle_down - tp * (7.0 + std::cos(4.0 * th))));
                worst = std::max(worst, std::abs(*rep.tangle_up - 3.0 * tp * (5.0 + 3.0 * std::cos(4.0 * th))));
                const double cud = *rep.concurrence_updown, cdd = *rep.concurrence_downdown;
                worst = std::max(worst, std::abs(*rep.tangle_down - (cud * cud + 2.0 * cdd * cdd)));
                worst = std::max(worst, std::abs(*rep.tangle_up - 3.0 * cud * cud));
            }
        }
        record("closed_form_tangles", worst <= 1e-10, "max gap = " + fmt17(worst));
    }

    // monogamy, vanishing M=1 residuals, half-filling symmetry, entropy bound
    {
        double most_negative = 0.0;
        double worst_m1 = 0.0;
        double worst_half = 0.0;
        double worst_bound = 0.0;
        int violations = 0;
        for (int N = 2; N <= std::min(opt.max_n, 11); ++N)
            for (int M = 0; M <= N; ++M)
                for (int t = 0; t < 25; ++t) {
                    const auto rep = report(SystemConfig(N, M), u(rng));
                    for (const auto& d : {rep.residual_up, rep.residual_down})
                        if (d) {
                            most_negative = std::min(most_negative, *d);
                            if (*d < -1e-9) ++violations;
                        }
                    if (M == 1 && N <= 10) {
                        worst_m1 = std::max(worst_m1, std::abs(*rep.residual_up));
                        worst_m1 = std::max(worst_m1, std::abs(*rep.residual_down));
                    }
                    if (N == 2 * M && M >= 1) {
                        worst_half = std::max(worst_half, std::abs(*rep.residual_up - *rep.residual_down));
                        if (M >= 2) {
                            worst_half = std::max(worst_half, *rep.concurrence_upup);
                            worst_half = std::max(worst_half, *rep.concurrence_downdown);
                        }
                    }
                    const double bound = std::log2(std::min(M, N - M) + 1.0);
                    worst_bound = std::max(worst_bound, rep.entropy - bound);
                }
        record("monogamy", violations == 0,
               "violations: " + std::to_string(violations) + ", most negative residual = " + fmt17(most_negative));
        record("residuals_vanish_m1", worst_m1 <= 1e-10, "max |Delta^{N1}| = " + fmt17(worst_m1));
        record("half_filling_symmetry", worst_half <= 1e-10, "max gap = " + fmt17(worst_half));
        record("entropy_bound", worst_bound <= 1e-9, "max excess = " + fmt17(worst_bound));
    }

    // brute-force equivalence over the full grid
    {
        struct Task {
            int N, M;
        };
        std::vector<Task> tasks;
        for (int N = 2; N <= opt.max_n_oracle; ++N)
            for (int M = 0; M <= N; ++M) tasks.push_back({N, M});

        std::vector<std::vector<double>> thetas(tasks.size());
        for (auto& v : thetas) {
            v.resize(opt.thetas_oracle);
            for (auto& th : v) th = u(rng);
        }

        std::vector<double> gaps(tasks.size(), 0.0);
        parallel_for(tasks.size(), [&](std::size_t i) {
            double worst = 0.0;
            for (double th : thetas[i]) {
                const auto a = report(SystemConfig(tasks[i].N, tasks[i].M), th);
                const auto b = oracle_report(tasks[i].N, tasks[i].M, th);
                worst = std::max(worst, std::abs(a.entropy - b.entropy));
                worst = std::max(worst, detail::max_abs_gap(a.concurrence_upup, b.concurrence_upup));
                worst = std::max(worst, detail::max_abs_gap(a.concurrence_updown, b.concurrence_updown));
                worst = std::max(worst, detail::max_abs_gap(a.concurrence_downdown, b.concurrence_downdown));
                worst = std::max(worst, detail::max_abs_gap(a.tangle_up, b.tangle_up));
                worst = std::max(worst, detail::max_abs_gap(a.tangle_down, b.tangle_down));
                worst = std::max(worst, detail::max_abs_gap(a.residual_up, b.residual_up));
                worst = std::max(worst, detail::max_abs_gap(a.residual_down, b.residual_down));
            }
            gaps[i] = worst;
        });
        const double worst = *std::max_element(gaps.begin(), gaps.end());
        record("oracle_equivalence", worst <= 1e-9, "max measure gap = " + fmt17(worst));
    }

    // EPR reachability table for M = 1
    {
        bool ok = true;
        std::ostringstream os;
        for (int N = 2; N <= 10; ++N) {
            const bool reach = epr_reachable(N);
            ok = ok && (reach == (N <= 6));
            os << (N > 2 ? " " : "") << "N=" << N << ":" << (reach ? "yes" : "no");
        }
        record("epr_reachability", ok, os.str());
    }

    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace dotweb

#endif
