#ifndef DOTWEB_SECTOR_HPP
#define DOTWEB_SECTOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "dotweb/binomial.hpp"
#include "dotweb/errors.hpp"

// Closed-form time evolution of N equivalent-neighbor qubits restricted
// to the symmetric sector spanned by |Phi_{M-m,m}>|Phi_{m,N-M-m}>,
// m = 0..M'.  The full 2^N state is never materialized here; the state
// is the (M'+1)-vector of superposition coefficients gamma_m.
//
// All times are dimensionless, theta = kappa*t with hbar = 1.

namespace dotweb {

using Complex = std::complex<double>;

struct SystemConfig {
    int n_dots = 1; // N
    int m_up = 0;   // M, number of dots initially spin-up

    SystemConfig() = default;
    SystemConfig(int n, int m) : n_dots(n), m_up(m) {
        if (n < 1) throw Error("SystemConfig: N must be >= 1");
        if (m < 0 || m > n) throw Error("SystemConfig: require 0 <= M <= N");
    }

    // M' = min(M, N-M), dimension of the symmetric sector minus one
    int m_prime() const { return std::min(m_up, n_dots - m_up); }
};

struct SectorState {
    SystemConfig config;
    double theta = 0.0;
    std::vector<Complex> gamma; // size m_prime()+1
    bool renormalized = false;  // set if the printed coefficients failed normalization
};

struct SchmidtSpectrum {
    std::vector<double> probs; // P_m, size m_prime()+1
};

// Coefficient b_{nm}^{NM}: alternating sum over k of
//   C(m,k)/C(N-2k,M-k) * [ C(N+1-2k, n-k) - 2*C(N-2k, n-k-1) ].
inline double b_coeff(const SystemConfig& cfg, int n, int m) {
    const int N = cfg.n_dots;
    const int M = cfg.m_up;
    const int mp = cfg.m_prime();
    if (n < 0 || n > mp || m < 0 || m > mp)
        throw Error("b_coeff: indices must lie in [0, M']");
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double denom = binom(N - 2 * k, M - k);
        if (denom == 0.0)
            throw DegenerateDivision("b_coeff: C(N-2k, M-k) vanished at k=" + std::to_string(k));
        const double numer = binom(m, k) * (binom(N + 1 - 2 * k, n - k) - 2.0 * binom(N - 2 * k, n - k - 1));
        sum += (k % 2 == 0 ? 1.0 : -1.0) * numer / denom;
    }
    return sum;
}

// Phase exponent of the n-th mode: n(N+1-n) - M(N-M); always an integer,
// so every observable is 2*pi periodic in theta.
inline int phase_exponent(const SystemConfig& cfg, int n) {
    return n * (cfg.n_dots + 1 - n) - cfg.m_up * (cfg.n_dots - cfg.m_up);
}

// gamma_m^{NM}(theta) = sum_n b_{nm} exp(i [n(N+1-n) - M(N-M)] theta)
inline Complex gamma(const SystemConfig& cfg, int m, double theta) {
    const int mp = cfg.m_prime();
    if (m < 0 || m > mp) throw Error("gamma: m must lie in [0, M']");
    Complex g = 0.0;
    for (int n = 0; n <= mp; ++n)
        g += b_coeff(cfg, n, m) * std::exp(Complex(0.0, phase_exponent(cfg, n) * theta));
    return g;
}

// Weighted norm of a gamma vector: sum_m C(M,m) C(N-M,m) |gamma_m|^2.
inline double sector_norm_sq(const SystemConfig& cfg, const std::vector<Complex>& g) {
    double s = 0.0;
    for (int m = 0; m < static_cast<int>(g.size()); ++m)
        s += binom(cfg.m_up, m) * binom(cfg.n_dots - cfg.m_up, m) * std::norm(g[m]);
    return s;
}

// Full sector state at time theta.  If the printed closed form failed
// normalization by more than 1e-8 the state is renormalized and flagged;
// the formula is exact in practice so the flag stays false.
inline SectorState evolve(const SystemConfig& cfg, double theta) {
    const int mp = cfg.m_prime();
    SectorState st;
    st.config = cfg;
    st.theta = theta;
    st.gamma.resize(mp + 1);

    // b table once, reused across m
    std::vector<std::vector<double>> b(mp + 1, std::vector<double>(mp + 1));
    for (int n = 0; n <= mp; ++n)
        for (int m = 0; m <= mp; ++m)
            b[n][m] = b_coeff(cfg, n, m);

    for (int m = 0; m <= mp; ++m) {
        Complex g = 0.0;
        for (int n = 0; n <= mp; ++n)
            g += b[n][m] * std::exp(Complex(0.0, phase_exponent(cfg, n) * theta));
        st.gamma[m] = g;
    }

    const double nrm2 = sector_norm_sq(cfg, st.gamma);
    if (std::abs(nrm2 - 1.0) > 1e-8) {
        const double s = 1.0 / std::sqrt(nrm2);
        for (auto& g : st.gamma) g *= s;
        st.renormalized = true;
    }
    return st;
}

// Schmidt coefficients P_m = C(M,m) C(N-M,m) |gamma_m|^2 of the
// bipartition between the initially-up and initially-down groups.
inline SchmidtSpectrum schmidt(const SectorState& st) {
    const auto& cfg = st.config;
    SchmidtSpectrum sp;
    sp.probs.resize(st.gamma.size());
    for (int m = 0; m < static_cast<int>(st.gamma.size()); ++m) {
        double p = binom(cfg.m_up, m) * binom(cfg.n_dots - cfg.m_up, m) * std::norm(st.gamma[m]);
        sp.probs[m] = std::max(p, 0.0);
    }
    return sp;
}

} // namespace dotweb

#endif
