#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qca/qop.hpp"

namespace qca {

// --- single-qubit Kraus channels -----------------------------------------

struct KrausPair {
    Mat k1, k2; // 2x2
};

inline KrausPair kraus_damping(double theta_d) {
    if (theta_d < 0) throw std::invalid_argument("theta_d must be >= 0");
    KrausPair k;
    k.k1 = Mat::Zero(2, 2);
    k.k1(0, 1) = std::sqrt(1.0 - std::exp(-theta_d)); // sigma_-
    k.k2 = Mat::Zero(2, 2);
    k.k2(0, 0) = 1.0;
    k.k2(1, 1) = std::exp(-theta_d / 2);
    return k;
}

// a*I +- b*sigma_z with a^2 = e^{-theta_p}/2, b^2 = (1-e^{-theta_p})/2 so that
// 2(a^2+b^2) = 1 and the channel is CPTP. `printed_form` switches a^2 to
// e^{-theta_p/2}/2, which is not trace preserving; kept for comparison only.
inline KrausPair kraus_dephasing(double theta_p, bool printed_form = false) {
    if (theta_p < 0) throw std::invalid_argument("theta_p must be >= 0");
    const double a = std::sqrt((printed_form ? std::exp(-theta_p / 2) : std::exp(-theta_p)) / 2);
    const double b = std::sqrt((1.0 - std::exp(-theta_p)) / 2);
    KrausPair k;
    k.k1 = Mat::Zero(2, 2);
    k.k2 = Mat::Zero(2, 2);
    k.k1(0, 0) = a + b; k.k1(1, 1) = a - b;
    k.k2(0, 0) = a - b; k.k2(1, 1) = a + b;
    return k;
}

// Choi matrix sum_k vec(K_k) vec(K_k)^dag; PSD iff the channel is CP.
inline Mat choi_matrix(const KrausPair& k) {
    auto vec = [](const Mat& m) {
        Vec v(m.size());
        long idx = 0;
        for (long c = 0; c < m.cols(); ++c)
            for (long r = 0; r < m.rows(); ++r) v[idx++] = m(r, c);
        return v;
    };
    const Vec v1 = vec(k.k1), v2 = vec(k.k2);
    return v1 * v1.adjoint() + v2 * v2.adjoint();
}

// K rho K^dag for a single-qubit operator K (2x2) on qubit q, in O(dim^2).
inline Mat conjugate1(const Mat& rho, const Mat& k, int q, int n_q) {
    const long dim = 1L << n_q;
    const long mask = 1L << q;
    Mat out = Mat::Zero(dim, dim);
    for (int rb = 0; rb < 2; ++rb) {
        for (int rs = 0; rs < 2; ++rs) {
            const Cplx a = k(rb, rs);
            if (a == Cplx(0.0)) continue;
            for (int cb = 0; cb < 2; ++cb) {
                for (int cs = 0; cs < 2; ++cs) {
                    const Cplx w = a * std::conj(k(cb, cs));
                    if (w == Cplx(0.0)) continue;
                    for (long r = 0; r < dim; ++r) {
                        if (((r & mask) != 0) != (rb != 0)) continue;
                        const long rsrc = rs ? (r | mask) : (r & ~mask);
                        for (long c = 0; c < dim; ++c) {
                            if (((c & mask) != 0) != (cb != 0)) continue;
                            const long csrc = cs ? (c | mask) : (c & ~mask);
                            out(r, c) += w * rho(rsrc, csrc);
                        }
                    }
                }
            }
        }
    }
    return out;
}

// Tensor product of per-qubit 2x2 unitaries, built elementwise in O(dim^2 n_q).
inline Mat product_unitary(const std::vector<Mat>& u1q) {
    const int n_q = static_cast<int>(u1q.size());
    const long dim = 1L << n_q;
    Mat u(dim, dim);
    for (long r = 0; r < dim; ++r) {
        for (long c = 0; c < dim; ++c) {
            Cplx v = 1.0;
            for (int q = 0; q < n_q && v != Cplx(0.0); ++q)
                v *= u1q[static_cast<std::size_t>(q)]((r >> q) & 1, (c >> q) & 1);
            u(r, c) = v;
        }
    }
    return u;
}

// Embed a 2x2 operator at qubit q of an n_q-qubit register (qubit q = bit q).
inline Mat embed1(const Mat& m, int q, int n_q) {
    const long dim = 1L << n_q;
    Mat out = Mat::Zero(dim, dim);
    const long mask = 1L << q;
    for (long b = 0; b < dim; ++b) {
        const int col_bit = (b & mask) ? 1 : 0;
        for (int row_bit = 0; row_bit < 2; ++row_bit) {
            const Cplx amp = m(row_bit, col_bit);
            if (amp == Cplx(0.0)) continue;
            const long b2 = row_bit ? (b | mask) : (b & ~mask);
            out(b2, b) = amp;
        }
    }
    return out;
}

// One dissipative channel as the uniform site mixture
// D(rho) = (1/n_q) sum_q [K1_q rho K1_q^dag + K2_q rho K2_q^dag].
inline Mat apply_site_mixture(const Mat& rho, const KrausPair& k, int n_q) {
    const long dim = 1L << n_q;
    if (rho.rows() != dim) throw std::invalid_argument("dimension mismatch");
    Mat out = Mat::Zero(dim, dim);
    for (int q = 0; q < n_q; ++q)
        out += conjugate1(rho, k.k1, q, n_q) + conjugate1(rho, k.k2, q, n_q);
    return out / static_cast<double>(n_q);
}

// Damping mixture followed by dephasing mixture.
inline Mat apply_channel_layer(const Mat& rho, double theta_d, double theta_p, int n_q) {
    return apply_site_mixture(apply_site_mixture(rho, kraus_damping(theta_d), n_q),
                              kraus_dephasing(theta_p), n_q);
}

// --- Rydberg model --------------------------------------------------------

struct RydbergEig {
    Eigen::VectorXd lam;
    Mat vecs;
};

struct RydbergModel {
    double omega = 1.0;
    double c6 = 100.0;
    std::vector<std::array<double, 2>> positions; // lattice-spacing units
    double x_period = 0;                          // > 0: periodic along x
    // lazily built eigensystems of the (parameter-independent) Hamiltonians
    // used by apply_global_unitary; keyed by the site subset
    mutable std::map<std::vector<int>, RydbergEig> eig_cache;

    double blockade_radius() const { return std::pow(c6 / omega, 1.0 / 6.0); }

    double distance(int i, int j) const {
        double dx = positions[static_cast<std::size_t>(i)][0] - positions[static_cast<std::size_t>(j)][0];
        const double dy = positions[static_cast<std::size_t>(i)][1] - positions[static_cast<std::size_t>(j)][1];
        if (x_period > 0) {
            dx = std::fmod(std::abs(dx), x_period);
            dx = std::min(dx, x_period - dx);
        }
        return std::sqrt(dx * dx + dy * dy);
    }
};

// Two parallel rails of n sites at unit spacing, rail separation 1, periodic
// along the rail. Qubit i = rail A site i, qubit n+i = rail B site i.
inline RydbergModel two_rail_model(int n, double omega = 1.0, double c6_over_omega = 100.0) {
    RydbergModel m;
    m.omega = omega;
    m.c6 = c6_over_omega * omega;
    m.x_period = static_cast<double>(n);
    for (int rail = 0; rail < 2; ++rail)
        for (int i = 0; i < n; ++i)
            m.positions.push_back({static_cast<double>(i), static_cast<double>(rail)});
    return m;
}

// H = (Omega/2) sum_i sigma_x + sum_{i<j} C6/r^6 P1 P1 over the subset,
// embedded in the full register.
inline Mat rydberg_hamiltonian(const RydbergModel& model, const std::vector<int>& sites) {
    if (sites.empty()) throw std::invalid_argument("empty site subset");
    const int n_q = static_cast<int>(model.positions.size());
    const long dim = 1L << n_q;
    Mat h = Mat::Zero(dim, dim);
    Mat sx = Mat::Zero(2, 2);
    sx(0, 1) = 1.0; sx(1, 0) = 1.0;
    for (int s : sites) h += 0.5 * model.omega * embed1(sx, s, n_q);
    for (std::size_t a = 0; a < sites.size(); ++a) {
        for (std::size_t b = a + 1; b < sites.size(); ++b) {
            const double r = model.distance(sites[a], sites[b]);
            if (r <= 0) throw std::invalid_argument("coincident positions");
            const double v = model.c6 / std::pow(r, 6);
            const long m = (1L << sites[a]) | (1L << sites[b]);
            for (long bb = 0; bb < dim; ++bb)
                if ((bb & m) == m) h(bb, bb) += v;
        }
    }
    return h;
}

inline Mat hermitian_exp(const Mat& h, double t) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Vec phase(es.eigenvalues().size());
    for (long i = 0; i < phase.size(); ++i)
        phase[i] = std::exp(Cplx(0, -es.eigenvalues()[i] * t));
    return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

inline const RydbergEig& cached_eig(const RydbergModel& model, const std::vector<int>& sites) {
    auto it = model.eig_cache.find(sites);
    if (it == model.eig_cache.end()) {
        Eigen::SelfAdjointEigenSolver<Mat> es(rydberg_hamiltonian(model, sites));
        it = model.eig_cache.emplace(sites, RydbergEig{es.eigenvalues(), es.eigenvectors()}).first;
    }
    return it->second;
}

inline Mat eig_exp(const RydbergEig& e, double t) {
    Vec phase(e.lam.size());
    for (long i = 0; i < phase.size(); ++i) phase[i] = std::exp(Cplx(0, -e.lam[i] * t));
    return e.vecs * phase.asDiagonal() * e.vecs.adjoint();
}

// exp(-i H_both t1), then simultaneous independent rail evolutions for t2.
inline Mat apply_global_unitary(const Mat& rho, const RydbergModel& model, double t1, double t2) {
    if (t1 < 0 || t2 < 0) throw std::invalid_argument("times must be >= 0");
    const int n_q = static_cast<int>(model.positions.size());
    const int n = n_q / 2;
    std::vector<int> all(static_cast<std::size_t>(n_q)), rail_a, rail_b;
    for (int i = 0; i < n_q; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i) { rail_a.push_back(i); rail_b.push_back(n + i); }
    const Mat u1 = eig_exp(cached_eig(model, all), t1);
    const Mat u2 = eig_exp(cached_eig(model, rail_a), t2) * eig_exp(cached_eig(model, rail_b), t2);
    const Mat u = u2 * u1;
    return u * rho * u.adjoint();
}

inline Mat rotation_xy(double ax, double ay) {
    Mat rx = Mat::Zero(2, 2), ry = Mat::Zero(2, 2);
    const double cx = std::cos(ax / 2), sx = std::sin(ax / 2);
    const double cy = std::cos(ay / 2), sy = std::sin(ay / 2);
    rx(0, 0) = cx; rx(1, 1) = cx; rx(0, 1) = Cplx(0, -sx); rx(1, 0) = Cplx(0, -sx);
    ry(0, 0) = cy; ry(1, 1) = cy; ry(0, 1) = -sy; ry(1, 0) = sy;
    return rx * ry;
}

// Local single-qubit rotations exp(-i ax_q/2 sigma_x) exp(-i ay_q/2 sigma_y)
// with independent angles per qubit.
inline Mat apply_rotation_layer(const Mat& rho, const std::vector<double>& ax,
                                const std::vector<double>& ay, int n_q) {
    if (ax.size() != static_cast<std::size_t>(n_q) || ay.size() != static_cast<std::size_t>(n_q))
        throw std::invalid_argument("angle count mismatch");
    std::vector<Mat> r1q;
    r1q.reserve(static_cast<std::size_t>(n_q));
    for (int q = 0; q < n_q; ++q)
        r1q.push_back(rotation_xy(ax[static_cast<std::size_t>(q)], ay[static_cast<std::size_t>(q)]));
    const Mat u = product_unitary(r1q);
    return u * rho * u.adjoint();
}

// --- ansatz ---------------------------------------------------------------

struct Layer {
    std::vector<double> ax, ay;      // per-qubit rotation angles (two axes)
    double theta_d = 0, theta_p = 0; // channel strengths, >= 0
    double t1 = 0, t2 = 0;           // global-unitary times, >= 0
};

using VariationalParams = std::vector<Layer>;

// Layer layout in a flat parameter vector:
// [ax_0..ax_{nq-1}, ay_0..ay_{nq-1}, theta_d, theta_p, t1, t2].
inline int params_per_layer(int n_q) { return 2 * n_q + 4; }

inline std::vector<double> flatten(const VariationalParams& p) {
    std::vector<double> v;
    for (const auto& l : p) {
        v.insert(v.end(), l.ax.begin(), l.ax.end());
        v.insert(v.end(), l.ay.begin(), l.ay.end());
        v.push_back(l.theta_d); v.push_back(l.theta_p);
        v.push_back(l.t1); v.push_back(l.t2);
    }
    return v;
}

inline VariationalParams unflatten(const std::vector<double>& v, int n_q) {
    const std::size_t ppl = static_cast<std::size_t>(params_per_layer(n_q));
    if (ppl == 0 || v.size() % ppl != 0) throw std::invalid_argument("bad parameter count");
    VariationalParams p(v.size() / ppl);
    for (std::size_t l = 0; l < p.size(); ++l) {
        const double* o = v.data() + l * ppl;
        p[l].ax.assign(o, o + n_q);
        p[l].ay.assign(o + n_q, o + 2 * n_q);
        p[l].theta_d = o[2 * n_q];
        p[l].theta_p = o[2 * n_q + 1];
        p[l].t1 = o[2 * n_q + 2];
        p[l].t2 = o[2 * n_q + 3];
    }
    return p;
}

// Per layer: rotations -> dissipative channels -> global unitaries.
inline Mat apply_ansatz(Mat rho, const VariationalParams& params, const RydbergModel& model) {
    const int n_q = static_cast<int>(model.positions.size());
    for (const auto& l : params) {
        rho = apply_rotation_layer(rho, l.ax, l.ay, n_q);
        rho = apply_channel_layer(rho, std::max(0.0, l.theta_d), std::max(0.0, l.theta_p), n_q);
        rho = apply_global_unitary(rho, model, std::max(0.0, l.t1), std::max(0.0, l.t2));
    }
    return rho;
}

// --- Heisenberg picture and cost -----------------------------------------

// Adjoint generator on an observable: sum_i rate (c^dag O c - {c^dag c, O}/2).
inline Mat heisenberg_action(const Generator& g, const Mat& o) {
    Mat out = Mat::Zero(o.rows(), o.cols());
    for (const auto& j : g.jumps) {
        const Mat c = Mat(j.op);
        const Mat cd = c.adjoint();
        const Mat cdc = cd * c;
        out.noalias() += j.rate * (cd * o * c - 0.5 * (cdc * o + o * cdc));
    }
    return out;
}

// All 3-local Pauli words on each ring-site neighborhood (deduplicated); at
// three sites per ring this is the complete 4^3-word set on each ring.
inline std::vector<Mat> neighborhood_observables(int n_per_ring) {
    const int n_q = 2 * n_per_ring;
    Mat pauli[4];
    for (auto& m : pauli) m = Mat::Zero(2, 2);
    pauli[0](0, 0) = 1; pauli[0](1, 1) = 1;
    pauli[1](0, 1) = 1; pauli[1](1, 0) = 1;
    pauli[2](0, 1) = Cplx(0, -1); pauli[2](1, 0) = Cplx(0, 1);
    pauli[3](0, 0) = 1; pauli[3](1, 1) = -1;
    auto modn = [n_per_ring](int i) { return ((i % n_per_ring) + n_per_ring) % n_per_ring; };
    std::vector<std::vector<std::pair<int, int>>> seen; // sorted non-identity (qubit, pauli) keys
    std::vector<Mat> obs;
    for (int ring = 0; ring < 2; ++ring) {
        for (int i = 0; i < n_per_ring; ++i) {
            const int q0 = ring * n_per_ring + modn(i - 1);
            const int q1 = ring * n_per_ring + modn(i);
            const int q2 = ring * n_per_ring + modn(i + 1);
            for (int w = 0; w < 64; ++w) {
                std::vector<std::pair<int, int>> key;
                if (w & 3) key.emplace_back(q0, w & 3);
                if ((w >> 2) & 3) key.emplace_back(q1, (w >> 2) & 3);
                if ((w >> 4) & 3) key.emplace_back(q2, (w >> 4) & 3);
                std::sort(key.begin(), key.end());
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(key);
                Mat m = embed1(pauli[w & 3], q0, n_q) * embed1(pauli[(w >> 2) & 3], q1, n_q) *
                        embed1(pauli[(w >> 4) & 3], q2, n_q);
                obs.push_back(std::move(m));
            }
        }
    }
    return obs;
}

struct CostContext {
    std::vector<Mat> obs;
    std::vector<Mat> lh_obs; // heisenberg_action(generator, obs[i])
};

inline CostContext make_cost_context(const Generator& g, std::vector<Mat> observables) {
    CostContext c;
    c.lh_obs.reserve(observables.size());
    for (const auto& o : observables) c.lh_obs.push_back(heisenberg_action(g, o));
    c.obs = std::move(observables);
    return c;
}

// Per-observable trapezoidal one-step residuals
// r_i = <O_i>_next - <O_i>_t - (tau/2)(<L_H O_i>_next + <L_H O_i>_t).
inline std::vector<double> fv_residuals(const Mat& rho_next, const Mat& rho_t, double tau,
                                        const CostContext& ctx) {
    if (tau <= 0) throw std::invalid_argument("tau must be > 0");
    // tr(A B) as an elementwise sum: sum_ij A(i,j) B(j,i)
    auto tr = [](const Mat& a, const Mat& b) {
        return a.transpose().cwiseProduct(b).sum().real();
    };
    std::vector<double> r(ctx.obs.size());
    for (std::size_t i = 0; i < ctx.obs.size(); ++i) {
        const double a = tr(ctx.obs[i], rho_next);
        const double b = tr(ctx.obs[i], rho_t);
        const double la = tr(ctx.lh_obs[i], rho_next);
        const double lb = tr(ctx.lh_obs[i], rho_t);
        r[i] = a - b - 0.5 * tau * (la + lb);
    }
    return r;
}

// F_v = sum_i |r_i|: trapezoidal one-step cost, exact up to O(tau^3) per step.
inline double cost_fv(const Mat& rho_next, const Mat& rho_t, double tau, const CostContext& ctx) {
    double f = 0;
    for (double r : fv_residuals(rho_next, rho_t, tau, ctx)) f += std::abs(r);
    return f;
}

// sum_i r_i^2: smooth surrogate of cost_fv. The absolute-value cost is kinked
// wherever any residual crosses zero, which strands coordinate-wise local
// search far from the optimum; minimizing the squared residuals first and
// polishing on cost_fv reaches the same minima without the kinks.
inline double cost_fv_sq(const Mat& rho_next, const Mat& rho_t, double tau, const CostContext& ctx) {
    double f = 0;
    for (double r : fv_residuals(rho_next, rho_t, tau, ctx)) f += r * r;
    return f;
}

// --- optimizer ------------------------------------------------------------

struct OptimizeResult {
    std::vector<double> theta;
    double cost = 0;
    bool converged = true;
    int evaluations = 0;
};

// Layerwise bounded optimization: cycles over layers, minimizing one layer's
// parameters at a time with the rest frozen. Each block pass performs cyclic
// per-coordinate minimization: a coarse grid scan over the coordinate's
// bounded interval followed by golden-section refinement of the bracketing
// subinterval. The scan step makes the method robust to the kinks of
// absolute-value costs and to coordinates whose descent only opens up at
// finite parameter values. Terminates on relative improvement < 1e-6 over a
// full sweep or at the iteration caps.
inline OptimizeResult optimize_layerwise(const std::function<double(const std::vector<double>&)>& cost,
                                         std::vector<double> theta,
                                         const std::vector<std::pair<double, double>>& bounds,
                                         int params_per_block = -1,
                                         int max_sweeps = 12, int max_block_iters = 40) {
    if (theta.size() != bounds.size()) throw std::invalid_argument("bounds size mismatch");
    const std::size_t np = theta.size();
    if (params_per_block <= 0) params_per_block = static_cast<int>(np);
    const std::size_t blocks = (np + static_cast<std::size_t>(params_per_block) - 1) / static_cast<std::size_t>(params_per_block);
    for (std::size_t i = 0; i < np; ++i) theta[i] = std::clamp(theta[i], bounds[i].first, bounds[i].second);
    OptimizeResult res;
    double f = cost(theta);
    ++res.evaluations;
    constexpr double kGolden = 0.6180339887498949;
    auto minimize_coordinate = [&](std::size_t i) {
        const auto [lo, hi] = bounds[i];
        if (hi - lo < 1e-14) return;
        auto f_at = [&](double x) {
            std::vector<double> t = theta;
            t[i] = x;
            ++res.evaluations;
            return cost(t);
        };
        // coarse scan, keeping the incumbent value in the candidate set
        constexpr int kScan = 12;
        double bx = theta[i], bf = f;
        for (int k = 0; k <= kScan; ++k) {
            const double x = lo + (hi - lo) * k / kScan;
            const double fx = f_at(x);
            if (fx < bf) { bf = fx; bx = x; }
        }
        // golden-section refinement around the best candidate
        double a = std::max(lo, bx - (hi - lo) / kScan);
        double b = std::min(hi, bx + (hi - lo) / kScan);
        double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
        double f1 = f_at(x1), f2 = f_at(x2);
        for (int it = 0; it < 20 && (b - a) > 1e-7 * (hi - lo); ++it) {
            if (f1 < f2) { b = x2; x2 = x1; f2 = f1; x1 = b - kGolden * (b - a); f1 = f_at(x1); }
            else { a = x1; x1 = x2; f1 = f2; x2 = a + kGolden * (b - a); f2 = f_at(x2); }
        }
        if (f1 < bf) { bf = f1; bx = x1; }
        if (f2 < bf) { bf = f2; bx = x2; }
        if (bf < f - 1e-15) { theta[i] = bx; f = bf; }
    };
    bool hit_cap = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double f_sweep_start = f;
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            const std::size_t lo = blk * static_cast<std::size_t>(params_per_block);
            const std::size_t hi = std::min(np, lo + static_cast<std::size_t>(params_per_block));
            for (int it = 0; it < max_block_iters; ++it) {
                const double f_pass_start = f;
                for (std::size_t i = lo; i < hi; ++i) minimize_coordinate(i);
                if (f_pass_start - f < 1e-8 * (std::abs(f_pass_start) + 1e-12)) break;
            }
        }
        if (f_sweep_start - f < 1e-6 * (std::abs(f_sweep_start) + 1e-12)) { hit_cap = false; break; }
        hit_cap = sweep + 1 == max_sweeps;
    }
    res.theta = std::move(theta);
    res.cost = f;
    res.converged = !hit_cap;
    return res;
}

// --- fidelity -------------------------------------------------------------

inline Mat psd_sqrt(const Mat& m, double tol = 1e-8) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
    if (es.eigenvalues().minCoeff() < -tol) throw std::invalid_argument("matrix not PSD within tolerance");
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

// epsilon = 1 - F, F = (Tr sqrt(sqrt(rho_v) rho sqrt(rho_v)))^2.
inline double fidelity_error(const Mat& rho_v, const Mat& rho_exact) {
    const Mat s = psd_sqrt(rho_v);
    const Mat inner = s * (0.5 * (rho_exact + rho_exact.adjoint())) * s;
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8) throw std::invalid_argument("matrix not PSD within tolerance");
    double tr = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) tr += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
    return std::clamp(1.0 - tr * tr, 0.0, 1.0);
}

} // namespace qca
