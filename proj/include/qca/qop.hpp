#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "qca/eca.hpp"

namespace qca {

using Cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Cplx>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Two rings of n sites each on one qubit register. Qubit q corresponds to bit
// q of the basis index: input-ring site i at bit i, output-ring site i at bit
// n+i. `swapped` flips which ring currently plays the input role.
struct TwoRingLattice {
    int n = 0;
    bool swapped = false;

    explicit TwoRingLattice(int sites, bool swap_roles = false) : n(sites), swapped(swap_roles) {
        if (sites < 2 || 2 * sites > 24) throw std::invalid_argument("need 2 <= sites, <= 12 qubits total");
    }
    int qubits() const { return 2 * n; }
    long dim() const { return 1L << qubits(); }
    int input_bit(int i) const { return (swapped ? n : 0) + mod(i); }
    int output_bit(int i) const { return (swapped ? 0 : n) + mod(i); }
    int mod(int i) const { return ((i % n) + n) % n; }
};

// Assemble a sparse operator from its action on basis states. `f(b, emit)`
// calls emit(b2, amp) for every nonzero amplitude of op|b>.
template <class F>
SpMat sparse_from_action(long dim, F&& f) {
    std::vector<Eigen::Triplet<Cplx>> trips;
    auto emit_to = [&trips](long col) {
        return [&trips, col](long row, Cplx amp) { trips.emplace_back(static_cast<int>(row), static_cast<int>(col), amp); };
    };
    for (long b = 0; b < dim; ++b) f(b, emit_to(b));
    SpMat m(static_cast<int>(dim), static_cast<int>(dim));
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

struct JumpOperator {
    SpMat op;
    double rate = 1.0; // prefactor of c rho c^dag in the generator
    int site = 0;
    enum class Kind { classical, rk } kind = Kind::classical;
};

namespace detail {
inline int neighborhood(long b, const TwoRingLattice& lat, int i) {
    const int l = static_cast<int>((b >> lat.input_bit(i - 1)) & 1);
    const int c = static_cast<int>((b >> lat.input_bit(i)) & 1);
    const int r = static_cast<int>((b >> lat.input_bit(i + 1)) & 1);
    return 4 * l + 2 * c + r;
}
} // namespace detail

// Classical jump operators. Two per output site, split by the source value v
// of the target qubit:
//   c_{i,v} = sum_k |table(k)><v|_out(i) (x) Q_{i,k}
// so that sum_v c^dag c = identity per site and a firing overwrites the output
// site with the rule output of the frozen input neighborhood -- the same
// idempotent Markov process as the bit-level sampler.
inline std::vector<JumpOperator> build_classical_jumps(const RuleSet& r, const TwoRingLattice& lat) {
    std::vector<JumpOperator> out;
    for (int i = 0; i < lat.n; ++i) {
        for (int v = 0; v < 2; ++v) {
            const int ob = lat.output_bit(i);
            auto op = sparse_from_action(lat.dim(), [&](long b, auto emit) {
                if (static_cast<int>((b >> ob) & 1) != v) return;
                const int k = detail::neighborhood(b, lat, i);
                const long mask = 1L << ob;
                const long b2 = r.table[static_cast<std::size_t>(k)] ? (b | mask) : (b & ~mask);
                emit(b2, Cplx(1.0, 0.0));
            });
            out.push_back({std::move(op), 1.0, i, JumpOperator::Kind::classical});
        }
    }
    return out;
}

// Quantum jump operators targeting the Rokhsar-Kivelson dark state:
//   c_i^q = sum_k O_k Q_{i,k},  O_k = sigma_- for k = 110, else
//   mu = P0_{out(i-1)} |-><+|_out(i) P0_{out(i+1)},  |+-> = (|0> +- |1>)/sqrt2.
inline std::vector<JumpOperator> build_rk_jumps(const TwoRingLattice& lat) {
    std::vector<JumpOperator> out;
    for (int i = 0; i < lat.n; ++i) {
        const int ob = lat.output_bit(i);
        const int obl = lat.output_bit(i - 1);
        const int obr = lat.output_bit(i + 1);
        auto op = sparse_from_action(lat.dim(), [&](long b, auto emit) {
            const int k = detail::neighborhood(b, lat, i);
            const long mask = 1L << ob;
            if (k == 6) { // input neighborhood 110 -> plain lowering
                if (b & mask) emit(b & ~mask, Cplx(1.0, 0.0));
                return;
            }
            if (((b >> obl) & 1) || ((b >> obr) & 1)) return; // P0 on flanks
            // <+|v> = 1/sqrt2 for v in {0,1}; output (|0> - |1>)/sqrt2
            emit(b & ~mask, Cplx(0.5, 0.0));
            emit(b | mask, Cplx(-0.5, 0.0));
        });
        out.push_back({std::move(op), 1.0, i, JumpOperator::Kind::rk});
    }
    return out;
}

// Single-ring mu_i = P0_{i-1} |-><+|_i P0_{i+1} on an n-site ring; the
// operator the RK state must be dark against.
inline SpMat single_ring_mu(int i, int n) {
    const long dim = 1L << n;
    auto m = [n](int k) { return ((k % n) + n) % n; };
    const long bl = 1L << m(i - 1), bc = 1L << m(i), br = 1L << m(i + 1);
    return sparse_from_action(dim, [&](long b, auto emit) {
        if ((b & bl) || (b & br)) return;
        emit(b & ~bc, Cplx(0.5, 0.0));
        emit(b | bc, Cplx(-0.5, 0.0));
    });
}

struct RKState {
    Vec amplitudes; // single-ring Hilbert space, site i at bit i
    int z = 0;      // number of hard-dimer-allowed configurations
};

// |psi_RK> = (1/sqrt Z) prod_k (1 - P_{k-1} sigma+_k P_{k+1}) |00...0>,
// factors applied in ascending k.
inline RKState build_rk_state(int n) {
    if (n < 3 || n > 20) throw std::invalid_argument("ring size must be in [3,20]");
    const long dim = 1L << n;
    Vec psi = Vec::Zero(dim);
    psi[0] = 1.0;
    auto bit = [n](long b, int i) { return (b >> (((i % n) + n) % n)) & 1; };
    for (int k = 0; k < n; ++k) {
        Vec next = psi;
        for (long b = 0; b < dim; ++b) {
            if (psi[b] == Cplx(0.0) || bit(b, k) || bit(b, k - 1) || bit(b, k + 1)) continue;
            next[b | (1L << k)] -= psi[b];
        }
        psi = std::move(next);
    }
    RKState s;
    int z = 0;
    for (long b = 0; b < dim; ++b)
        if (psi[b] != Cplx(0.0)) ++z;
    s.z = z;
    s.amplitudes = psi / psi.norm();
    return s;
}

struct Generator {
    long dim = 0;
    std::vector<JumpOperator> jumps; // rates already include the phi weights
};

inline Generator classical_generator(const RuleSet& r, const TwoRingLattice& lat, double gamma) {
    Generator g;
    g.dim = lat.dim();
    g.jumps = build_classical_jumps(r, lat);
    for (auto& j : g.jumps) j.rate = gamma;
    return g;
}

inline Generator rk_generator(const TwoRingLattice& lat, double gamma) {
    Generator g;
    g.dim = lat.dim();
    g.jumps = build_rk_jumps(lat);
    for (auto& j : g.jumps) j.rate = gamma;
    return g;
}

// L = sin^2(phi pi/2) L_c + cos^2(phi pi/2) L_q via rate weighting; zero-weight
// families are dropped.
inline Generator mixed_generator(double phi, const Generator& l_c, const Generator& l_q) {
    if (phi < 0 || phi > 1) throw std::invalid_argument("phi must be in [0,1]");
    if (l_c.dim != l_q.dim) throw std::invalid_argument("generator dimension mismatch");
    const double s = std::sin(phi * std::numbers::pi / 2);
    const double c = std::cos(phi * std::numbers::pi / 2);
    // snap weights that are zero up to rounding (phi = 0 or 1) to exact zero
    double wc = s * s, wq = c * c;
    if (wc < 1e-24) wc = 0;
    if (wq < 1e-24) wq = 0;
    Generator g;
    g.dim = l_c.dim;
    for (const auto& j : l_c.jumps)
        if (wc > 0) { g.jumps.push_back(j); g.jumps.back().rate *= wc; }
    for (const auto& j : l_q.jumps)
        if (wq > 0) { g.jumps.push_back(j); g.jumps.back().rate *= wq; }
    return g;
}

// Column-major matrixization: vec(c rho c^dag) = (conj c (x) c) vec(rho), etc.
inline SpMat liouvillian_matrix(const Generator& g) {
    const int d = static_cast<int>(g.dim);
    SpMat id(d, d);
    id.setIdentity();
    SpMat l(d * d, d * d);
    for (const auto& j : g.jumps) {
        const SpMat cdc = (SpMat(j.op.adjoint()) * j.op).pruned();
        SpMat term = Eigen::kroneckerProduct(SpMat(j.op.conjugate()), j.op).eval();
        term -= SpMat(0.5 * Eigen::kroneckerProduct(id, cdc).eval());
        term -= SpMat(0.5 * Eigen::kroneckerProduct(SpMat(cdc.transpose()), id).eval());
        l += SpMat(j.rate * term);
    }
    return l;
}

struct SteadyState {
    Mat rho;
    bool unique = true;
    double residual = 0;        // ||L vec(rho)|| / ||vec(rho)||
    double second_residual = 0; // same for the best candidate orthogonal to rho
};

// Null vector of the matrixized generator by shift-inverted iteration
// (sigma just off zero so the factorization is nonsingular); a second,
// deflated iteration probes null-space degeneracy.
inline SteadyState steady_state(const Generator& g, int max_iter = 60, double tol = 1e-10) {
    const int d = static_cast<int>(g.dim);
    SpMat l = liouvillian_matrix(g);
    double scale = 0;
    for (const auto& j : g.jumps) scale = std::max(scale, j.rate);
    if (scale <= 0) scale = 1.0;
    SpMat shifted = l;
    {
        SpMat id(d * d, d * d);
        id.setIdentity();
        shifted -= SpMat((1e-3 * scale) * id);
    }
    Eigen::SparseLU<SpMat> lu;
    lu.compute(shifted);
    if (lu.info() != Eigen::Success) throw std::runtime_error("Liouvillian factorization failed");

    auto iterate = [&](Vec v, const Vec* deflate) {
        for (int it = 0; it < max_iter; ++it) {
            if (deflate) v -= (deflate->dot(v)) * (*deflate);
            v = lu.solve(v);
            if (deflate) v -= (deflate->dot(v)) * (*deflate);
            v /= v.norm();
            const double res = (l * v).norm() / scale;
            if (res < tol && it >= 2) break;
        }
        return v;
    };

    // vec(identity) overlaps every stationary state of a trace-preserving map
    Vec v0 = Vec::Zero(d * d);
    for (int i = 0; i < d; ++i) v0[i * d + i] = 1.0;
    v0 /= v0.norm();
    Vec v1 = iterate(v0, nullptr);

    SteadyState out;
    out.residual = (l * v1).norm() / scale;
    Vec r = Vec::Zero(d * d);
    { // deterministic pseudo-random probe
        std::uint64_t s = 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < d * d; ++i) {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            r[i] = Cplx(static_cast<double>(s >> 40) / (1 << 24) - 0.5,
                        static_cast<double>((s >> 16) & 0xffffff) / (1 << 24) - 0.5);
        }
    }
    Vec v2 = iterate(r, &v1);
    out.second_residual = (l * v2).norm() / scale;
    out.unique = out.second_residual > 1e3 * std::max(out.residual, tol);

    Mat rho(d, d);
    for (int c = 0; c < d; ++c)
        for (int rw = 0; rw < d; ++rw) rho(rw, c) = v1[static_cast<long>(c) * d + rw];
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const Cplx tr = rho.trace();
    if (std::abs(tr) < 1e-12) throw std::runtime_error("traceless null vector; steady state ill-defined");
    rho /= tr;
    out.rho = std::move(rho);
    return out;
}

// Entanglement negativity (||rho^{T_A}||_1 - 1)/2 across the qubit subset A.
inline double negativity(const Mat& rho, long mask_a, int n_qubits) {
    const long dim = 1L << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim) throw std::invalid_argument("dimension mismatch");
    if (mask_a == 0 || mask_a == dim - 1) throw std::invalid_argument("partition must be proper and nonempty");
    Mat pt(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            const long r2 = (r & ~mask_a) | (c & mask_a);
            const long c2 = (c & ~mask_a) | (r & mask_a);
            pt(r2, c2) = rho(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
    double s = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) s += std::abs(es.eigenvalues()[i]);
    return 0.5 * (s - 1.0);
}

inline Mat ensemble_density(const std::vector<Vec>& states) {
    if (states.empty()) throw std::invalid_argument("empty ensemble");
    const long d = states.front().size();
    Mat rho = Mat::Zero(d, d);
    for (const auto& psi : states) {
        if (psi.size() != d) throw std::invalid_argument("mixed dimensions");
        rho.noalias() += psi * psi.adjoint();
    }
    rho /= static_cast<double>(states.size());
    return rho;
}

// Schroedinger-picture derivative of rho under the dissipative generator.
inline Mat master_rhs(const Generator& g, const Mat& rho) {
    Mat d = Mat::Zero(rho.rows(), rho.cols());
    for (const auto& j : g.jumps) {
        const Mat crc = j.op * rho * Mat(j.op.adjoint());
        const Mat cdc = Mat(j.op.adjoint()) * Mat(j.op);
        d.noalias() += j.rate * (crc - 0.5 * (cdc * rho + rho * cdc));
    }
    return d;
}

// Dense master-equation oracle: embedded Fehlberg 4(5) with adaptive steps.
inline Mat integrate_master(const Generator& g, Mat rho, double t_total, double tol = 1e-9) {
    if (t_total < 0) throw std::invalid_argument("negative time");
    double t = 0;
    double rate = 0;
    for (const auto& j : g.jumps) rate += j.rate;
    double h = std::min(t_total, 0.1 / std::max(rate, 1e-12));
    while (t < t_total) {
        h = std::min(h, t_total - t);
        const Mat k1 = master_rhs(g, rho);
        const Mat k2 = master_rhs(g, rho + h * 0.25 * k1);
        const Mat k3 = master_rhs(g, rho + h * (3.0 / 32 * k1 + 9.0 / 32 * k2));
        const Mat k4 = master_rhs(g, rho + h * (1932.0 / 2197 * k1 - 7200.0 / 2197 * k2 + 7296.0 / 2197 * k3));
        const Mat k5 = master_rhs(g, rho + h * (439.0 / 216 * k1 - 8.0 * k2 + 3680.0 / 513 * k3 - 845.0 / 4104 * k4));
        const Mat k6 = master_rhs(g, rho + h * (-8.0 / 27 * k1 + 2.0 * k2 - 3544.0 / 2565 * k3 + 1859.0 / 4104 * k4 - 11.0 / 40 * k5));
        const Mat r4 = rho + h * (25.0 / 216 * k1 + 1408.0 / 2565 * k3 + 2197.0 / 4104 * k4 - 1.0 / 5 * k5);
        const Mat r5 = rho + h * (16.0 / 135 * k1 + 6656.0 / 12825 * k3 + 28561.0 / 56430 * k4 - 9.0 / 50 * k5 + 2.0 / 55 * k6);
        const double err = (r5 - r4).norm();
        const double cap = tol * std::max(1.0, rho.norm());
        if (err <= cap || h <= 1e-12) {
            rho = r5;
            t += h;
        }
        const double fac = err > 0 ? 0.9 * std::pow(cap / err, 0.2) : 2.0;
        h *= std::clamp(fac, 0.2, 2.0);
    }
    return rho;
}

// Diagonal of rho in the computational basis as probabilities.
inline Eigen::VectorXd populations(const Mat& rho) {
    Eigen::VectorXd p(rho.rows());
    for (long i = 0; i < rho.rows(); ++i) p[i] = rho(i, i).real();
    return p;
}

} // namespace qca
