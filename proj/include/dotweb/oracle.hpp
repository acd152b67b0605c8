#ifndef DOTWEB_ORACLE_HPP
#define DOTWEB_ORACLE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "dotweb/measures.hpp"
#include "dotweb/sector.hpp"

// Brute-force ground truth: the full 2^N Hamiltonian, exact evolution by
// eigendecomposition, partial traces, and every measure recomputed from
// first principles.  No code path is shared with the sector closed forms
// except the concurrence eigenvalue routine.
//
// Basis convention: little-endian, dot n is bit n of the basis index,
// bit value 1 means spin-up.  In oracle_report the dots 0..M-1 start
// spin-up.

namespace dotweb {

inline constexpr int kOracleMaxDots = 14;

struct FullState {
    int n_dots = 1;
    Eigen::VectorXcd amplitudes; // dimension 2^n_dots
};

struct CouplingMatrix {
    Eigen::MatrixXd entries; // symmetric, zero diagonal, units of kappa

    static CouplingMatrix uniform(int n, double kappa = 1.0) {
        CouplingMatrix c;
        c.entries = Eigen::MatrixXd::Constant(n, n, kappa);
        c.entries.diagonal().setZero();
        return c;
    }
    int n_dots() const { return static_cast<int>(entries.rows()); }
};

// H = (kappa_nm/2) sum_{n != m} (s+_n s-_m + s-_n s+_m); both orderings of a
// pair contribute, so each single-flip hop carries matrix element kappa_nm.
inline Eigen::MatrixXd build_hamiltonian(const CouplingMatrix& couplings) {
    const int N = couplings.n_dots();
    if (N > kOracleMaxDots) throw SizeLimit("build_hamiltonian: N > 14");
    const std::size_t dim = std::size_t{1} << N;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t b = 0; b < dim; ++b)
        for (int n = 0; n < N; ++n)
            for (int m = n + 1; m < N; ++m) {
                const bool bn = (b >> n) & 1u;
                const bool bm = (b >> m) & 1u;
                if (bn == bm) continue;
                const std::size_t b2 = b ^ ((std::size_t{1} << n) | (std::size_t{1} << m));
                if (b2 > b) h(b2, b) = h(b, b2) = couplings.entries(n, m);
            }
    return h;
}

namespace detail {

// Basis bitmasks of fixed Hamming weight, ascending.
inline std::vector<std::uint32_t> weight_basis(int n, int w) {
    std::vector<std::uint32_t> basis;
    for (std::uint32_t b = 0; b < (1u << n); ++b)
        if (std::popcount(b) == w) basis.push_back(b);
    return basis;
}

} // namespace detail

// exp(-i H theta) |psi> via dense eigendecomposition of each occupied
// Hamming-weight block (the Hamiltonian conserves the excitation count,
// so blocks evolve independently and exactly).
inline FullState evolve_full(const FullState& initial, const CouplingMatrix& couplings, double theta) {
    const int N = initial.n_dots;
    if (N > kOracleMaxDots) throw SizeLimit("evolve_full: N > 14");
    if (couplings.n_dots() != N) throw ShapeError("evolve_full: coupling size mismatch");

    FullState out;
    out.n_dots = N;
    out.amplitudes = Eigen::VectorXcd::Zero(initial.amplitudes.size());

    for (int w = 0; w <= N; ++w) {
        const auto basis = detail::weight_basis(N, w);
        Eigen::VectorXcd block(basis.size());
        double occ = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            block(i) = initial.amplitudes(basis[i]);
            occ += std::norm(block(i));
        }
        if (occ < 1e-300) continue;

        Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(basis.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (int n = 0; n < N; ++n)
                for (int m = n + 1; m < N; ++m) {
                    const std::uint32_t b = basis[i];
                    const bool bn = (b >> n) & 1u;
                    const bool bm = (b >> m) & 1u;
                    if (bn == bm) continue;
                    const std::uint32_t b2 = b ^ ((1u << n) | (1u << m));
                    const auto it = std::lower_bound(basis.begin(), basis.end(), b2);
                    const std::size_t j = static_cast<std::size_t>(it - basis.begin());
                    if (j > i) hb(j, i) = hb(i, j) = couplings.entries(n, m);
                }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hb);
        Eigen::VectorXcd coeffs = es.eigenvectors().transpose() * block;
        for (Eigen::Index k = 0; k < coeffs.size(); ++k)
            coeffs(k) *= std::exp(Complex(0.0, -es.eigenvalues()(k) * theta));
        Eigen::VectorXcd evolved = es.eigenvectors() * coeffs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            out.amplitudes(basis[i]) = evolved(i);
    }
    return out;
}

// Full-space variant: eigendecomposition of the whole 2^N matrix.
// Secondary cross-check of the block evolution.
inline FullState evolve_full_dense(const FullState& initial, const CouplingMatrix& couplings, double theta) {
    const Eigen::MatrixXd h = build_hamiltonian(couplings);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    Eigen::VectorXcd coeffs = es.eigenvectors().transpose() * initial.amplitudes;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        coeffs(k) *= std::exp(Complex(0.0, -es.eigenvalues()(k) * theta));
    FullState out;
    out.n_dots = initial.n_dots;
    out.amplitudes = es.eigenvectors() * coeffs;
    return out;
}

// Reduced density matrix over the kept dots.  The induced basis is
// big-endian in keep order: keep[0] is the leftmost ket label, so for a
// pair the index is 2*bit(keep[0]) + bit(keep[1]) and matches the
// {|dd>,|du>,|ud>,|uu>} order of TwoQubitDensity.
inline Eigen::MatrixXcd partial_trace(const FullState& state, const std::vector<int>& keep) {
    const int N = state.n_dots;
    const int k = static_cast<int>(keep.size());
    std::uint32_t keep_mask = 0;
    for (int q : keep) {
        if (q < 0 || q >= N) throw IndexError("partial_trace: dot index out of range");
        if (keep_mask & (1u << q)) throw IndexError("partial_trace: duplicate dot index");
        keep_mask |= 1u << q;
    }

    const std::size_t dim = std::size_t{1} << N;
    const std::size_t kd = std::size_t{1} << k;
    const std::size_t rd = dim >> k;

    // bucket amplitudes by the traced-out bit pattern
    std::vector<Eigen::VectorXcd> buckets(rd, Eigen::VectorXcd::Zero(kd));
    std::vector<int> rest_bits;
    for (int q = 0; q < N; ++q)
        if (!(keep_mask & (1u << q))) rest_bits.push_back(q);

    for (std::size_t b = 0; b < dim; ++b) {
        std::size_t p = 0;
        for (int j = 0; j < k; ++j)
            p |= static_cast<std::size_t>((b >> keep[j]) & 1u) << (k - 1 - j);
        std::size_t r = 0;
        for (std::size_t j = 0; j < rest_bits.size(); ++j)
            r |= static_cast<std::size_t>((b >> rest_bits[j]) & 1u) << j;
        buckets[r](p) = state.amplitudes(b);
    }

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kd, kd);
    for (const auto& v : buckets) rho += v * v.adjoint();
    return rho;
}

// Linear entropy S = 2[1 - tr(rho^2)] of a single-qubit state; checked
// against the equivalent 4 det(rho) form.
inline double linear_entropy(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != 2 || rho.cols() != 2) throw ShapeError("linear_entropy: need a 2x2 density matrix");
    const double s = 2.0 * (1.0 - (rho * rho).trace().real());
    const double via_det = 4.0 * rho.determinant().real();
    if (std::abs(s - via_det) > 1e-10) throw Error("linear_entropy: purity/determinant mismatch");
    return s;
}

inline double concurrence_matrix(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw ShapeError("concurrence_matrix: need a 4x4 density matrix");
    TwoQubitDensity d;
    d.matrix = rho;
    return concurrence(d);
}

// Every measure from the brute-force state alone.  The residual tangles
// use the raw CKW sum over all partner dots, not the multiplicity
// shortcut of the closed-form module.
inline EntanglementReport oracle_report(int N, int M, double theta) {
    const SystemConfig cfg(N, M); // validates N, M
    if (N > kOracleMaxDots) throw SizeLimit("oracle_report: N > 14");

    FullState init;
    init.n_dots = N;
    init.amplitudes = Eigen::VectorXcd::Zero(std::size_t{1} << N);
    const std::uint32_t up_mask = (M == 0) ? 0u : ((1u << M) - 1u); // dots 0..M-1 up
    init.amplitudes(up_mask) = 1.0;

    const FullState psi = evolve_full(init, CouplingMatrix::uniform(N), theta);

    EntanglementReport rep;
    rep.theta = theta;

    // entropy of the up-group vs rest bipartition
    {
        std::vector<int> grp;
        const int side = std::min(M, N - M);
        if (M <= N - M)
            for (int q = 0; q < M; ++q) grp.push_back(q);
        else
            for (int q = M; q < N; ++q) grp.push_back(q);
        if (side == 0) {
            rep.entropy = 0.0;
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(partial_trace(psi, grp));
            double e = 0.0;
            for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
                const double p = es.eigenvalues()(i);
                if (p > 1e-15) e -= p * std::log2(p);
            }
            rep.entropy = e;
        }
    }

    if (M >= 2) rep.concurrence_upup = concurrence_matrix(partial_trace(psi, {0, 1}));
    if (M >= 1 && N - M >= 1) rep.concurrence_updown = concurrence_matrix(partial_trace(psi, {0, M}));
    if (N - M >= 2) rep.concurrence_downdown = concurrence_matrix(partial_trace(psi, {M, M + 1}));

    auto ckw = [&](int dot) {
        double d = linear_entropy(partial_trace(psi, {dot}));
        for (int m = 0; m < N; ++m) {
            if (m == dot) continue;
            const double c = concurrence_matrix(partial_trace(psi, {dot, m}));
            d -= c * c;
        }
        return d;
    };

    if (M >= 1) {
        rep.tangle_up = linear_entropy(partial_trace(psi, {0}));
        rep.residual_up = ckw(0);
    }
    if (N - M >= 1) {
        rep.tangle_down = linear_entropy(partial_trace(psi, {M}));
        rep.residual_down = ckw(M);
    }
    return rep;
}

} // namespace dotweb

#endif
