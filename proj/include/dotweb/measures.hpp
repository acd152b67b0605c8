#ifndef DOTWEB_MEASURES_HPP
#define DOTWEB_MEASURES_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <optional>

#include "dotweb/sector.hpp"

// Entanglement measures of the sector state: von Neumann entropy of the
// up/down bipartition, the three pairwise reduced density matrices and
// their Wootters concurrences, one-vs-rest tangles, and the CKW
// residual tangles.
//
// Two-qubit basis order is fixed as {|dd>, |du>, |ud>, |uu>}; in the
// mixed up-down pair the first label is the initially-up dot.

namespace dotweb {

using Matrix4c = Eigen::Matrix4cd;

struct TwoQubitDensity {
    Matrix4c matrix = Matrix4c::Zero();
};

enum class PairKind { UpUp, UpDown, DownDown };
enum class SpinKind { Up, Down };

// Measures that do not apply to a configuration (e.g. an up-up pair
// when M < 2) are absent rather than zero, so structurally-zero values
// stay distinguishable from undefined ones.
struct EntanglementReport {
    double theta = 0.0;
    double entropy = 0.0; // ebits
    std::optional<double> concurrence_upup;
    std::optional<double> concurrence_updown;
    std::optional<double> concurrence_downdown;
    std::optional<double> tangle_up;
    std::optional<double> tangle_down;
    std::optional<double> residual_up;
    std::optional<double> residual_down;
};

inline double von_neumann_entropy(const SchmidtSpectrum& sp) {
    double e = 0.0;
    for (double p : sp.probs)
        if (p > 0.0) e -= p * std::log2(p);
    return e;
}

// alpha weights of the up-down pair: sum_m |gamma_m|^2 C(M-1,m-1+j) C(N-M-1,m-j)
inline double alpha_updown(const SectorState& st, int j) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    double a = 0.0;
    for (int m = 0; m < static_cast<int>(st.gamma.size()); ++m)
        a += std::norm(st.gamma[m]) * binom(M - 1, m - 1 + j) * binom(N - M - 1, m - j);
    return a;
}

// rho_{ud} = alpha_0 |dd><dd| + alpha_1 |uu><uu|
//          + sum_m C(M-1,m) C(N-M-1,m) |beta_m><beta_m|,
// beta_m = gamma_m |ud> + gamma_{m+1} |du>.
inline TwoQubitDensity reduced_updown(const SectorState& st) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    if (N < 2 || M < 1 || M > N - 1)
        throw InvalidPair("reduced_updown: requires N >= 2 and 1 <= M <= N-1");

    TwoQubitDensity rho;
    rho.matrix(0, 0) = alpha_updown(st, 0);
    rho.matrix(3, 3) = alpha_updown(st, 1);

    const int mp = st.config.m_prime();
    for (int m = 0; m <= mp - 1; ++m) {
        const double w = binom(M - 1, m) * binom(N - M - 1, m);
        if (w == 0.0) continue;
        Eigen::Vector4cd beta = Eigen::Vector4cd::Zero();
        beta(2) = st.gamma[m];     // |ud>
        beta(1) = st.gamma[m + 1]; // |du>
        rho.matrix += w * beta * beta.adjoint();
    }
    return rho;
}

// alpha weights of a same-kind pair (j = 0,1,2):
//   up-up:     sum_m |gamma_m|^2 C(N-M,m) C(M-2,   m-2+j)
//   down-down: sum_m |gamma_m|^2 C(M,  m) C(N-M-2, m-j)
inline double alpha_same(const SectorState& st, PairKind kind, int j) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    double a = 0.0;
    for (int m = 0; m < static_cast<int>(st.gamma.size()); ++m) {
        const double g2 = std::norm(st.gamma[m]);
        if (kind == PairKind::UpUp)
            a += g2 * binom(N - M, m) * binom(M - 2, m - 2 + j);
        else
            a += g2 * binom(M, m) * binom(N - M - 2, m - j);
    }
    return a;
}

// rho_k = alpha_0 |dd><dd| + 2 alpha_1 |B><B| + alpha_2 |uu><uu|,
// with the triplet Bell state |B> = (|ud> + |du>)/sqrt(2).
inline TwoQubitDensity reduced_same(const SectorState& st, PairKind kind) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    if (kind == PairKind::UpDown)
        throw InvalidPair("reduced_same: use reduced_updown for mixed pairs");
    if (kind == PairKind::UpUp && M < 2)
        throw InvalidPair("reduced_same: up-up pair requires M >= 2");
    if (kind == PairKind::DownDown && N - M < 2)
        throw InvalidPair("reduced_same: down-down pair requires N-M >= 2");

    const double a0 = alpha_same(st, kind, 0);
    const double a1 = alpha_same(st, kind, 1);
    const double a2 = alpha_same(st, kind, 2);

    TwoQubitDensity rho;
    rho.matrix(0, 0) = a0;
    rho.matrix(3, 3) = a2;
    // 2 a1 |B><B| spreads evenly over the {|du>, |ud>} block
    rho.matrix(1, 1) = a1;
    rho.matrix(2, 2) = a1;
    rho.matrix(1, 2) = a1;
    rho.matrix(2, 1) = a1;
    return rho;
}

// Wootters concurrence: C = max{0, 2 max_i lambda_i - sum_i lambda_i},
// lambda_i the square roots of the eigenvalues of
// rho (sy x sy) rho^* (sy x sy).  Evaluated through the Hermitian
// equivalent: the lambda_i are the singular values of
// sqrt(rho) (sy x sy) sqrt(rho)^*, which keeps the near-zero ones at
// machine accuracy.  Negative eigenvalue noise in rho is clamped to 0.
inline double concurrence(const TwoQubitDensity& rho) {
    Matrix4c yy = Matrix4c::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho.matrix);
    Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix4c sqrt_rho = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    const Matrix4c a = sqrt_rho * yy * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Matrix4c> svd(a);
    const auto& lam = svd.singularValues(); // sorted descending
    return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

// E_F = H((1 + sqrt(1 - C^2))/2) with the binary Shannon entropy H.
inline double entanglement_of_formation(double c) {
    if (c < 0.0 || c > 1.0) throw Error("entanglement_of_formation: need 0 <= c <= 1");
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    auto h = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
    return h(x) + h(1.0 - x);
}

// Probability that one given dot of the chosen kind is spin-down.  The
// Pascal-combined weights below equal alpha_{k0}+alpha_{k1} whenever the
// same-kind pair exists and stay valid down to a single-dot population.
inline double alpha_single(const SectorState& st, SpinKind kind) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    double a = 0.0;
    for (int m = 0; m < static_cast<int>(st.gamma.size()); ++m) {
        const double g2 = std::norm(st.gamma[m]);
        if (kind == SpinKind::Up)
            a += g2 * binom(N - M, m) * binom(M - 1, m - 1);
        else
            a += g2 * binom(M, m) * binom(N - M - 1, m);
    }
    return a;
}

// One-vs-rest tangle tau_k = 4 alpha_k (1 - alpha_k), the linear
// entropy of the single-qubit reduced state.
inline double tangle(const SectorState& st, SpinKind kind) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    if (kind == SpinKind::Up && M < 1)
        throw InvalidSpin("tangle: no initially-up dot exists");
    if (kind == SpinKind::Down && N - M < 1)
        throw InvalidSpin("tangle: no initially-down dot exists");
    const double a = alpha_single(st, kind);
    return 4.0 * a * (1.0 - a);
}

// CKW residual tangle:
//   Delta_up   = tau_up   - (M-1)   C_uu^2 - (N-M) C_ud^2
//   Delta_down = tau_down - (N-M-1) C_dd^2 - M     C_ud^2
// Concurrence terms with zero multiplicity contribute nothing.
inline double residual_tangle(const SectorState& st, SpinKind kind) {
    const int N = st.config.n_dots;
    const int M = st.config.m_up;
    double d = tangle(st, kind);
    if (kind == SpinKind::Up) {
        if (M >= 2) {
            const double c = concurrence(reduced_same(st, PairKind::UpUp));
            d -= (M - 1) * c * c;
        }
        if (N - M >= 1) {
            const double c = concurrence(reduced_updown(st));
            d -= (N - M) * c * c;
        }
    } else {
        if (N - M >= 2) {
            const double c = concurrence(reduced_same(st, PairKind::DownDown));
            d -= (N - M - 1) * c * c;
        }
        if (M >= 1) {
            const double c = concurrence(reduced_updown(st));
            d -= M * c * c;
        }
    }
    return d;
}

inline EntanglementReport report(const SystemConfig& cfg, double theta) {
    const SectorState st = evolve(cfg, theta);
    const int N = cfg.n_dots;
    const int M = cfg.m_up;

    EntanglementReport rep;
    rep.theta = theta;
    rep.entropy = von_neumann_entropy(schmidt(st));

    std::optional<double> c_uu, c_ud, c_dd;
    if (M >= 2) c_uu = concurrence(reduced_same(st, PairKind::UpUp));
    if (M >= 1 && N - M >= 1) c_ud = concurrence(reduced_updown(st));
    if (N - M >= 2) c_dd = concurrence(reduced_same(st, PairKind::DownDown));
    rep.concurrence_upup = c_uu;
    rep.concurrence_updown = c_ud;
    rep.concurrence_downdown = c_dd;

    if (M >= 1) {
        rep.tangle_up = tangle(st, SpinKind::Up);
        double d = *rep.tangle_up;
        if (c_uu) d -= (M - 1) * (*c_uu) * (*c_uu);
        if (c_ud) d -= (N - M) * (*c_ud) * (*c_ud);
        rep.residual_up = d;
    }
    if (N - M >= 1) {
        rep.tangle_down = tangle(st, SpinKind::Down);
        double d = *rep.tangle_down;
        if (c_dd) d -= (N - M - 1) * (*c_dd) * (*c_dd);
        if (c_ud) d -= M * (*c_ud) * (*c_ud);
        rep.residual_down = d;
    }
    return rep;
}

} // namespace dotweb

#endif
