#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qca/kernels.hpp"
#include "qca/qop.hpp"
#include "qca/rng.hpp"
#include "qca/stochastic_ca.hpp"

namespace qca {

// Quantum-jump propagator for one generator (H = 0, purely dissipative).
// Gamma = sum_i rate_i c_i^dag c_i is Hermitian PSD, so the non-Hermitian
// drift exp(-Gamma t / 2) is evaluated exactly in Gamma's eigenbasis; jump
// times come from bisecting the analytic squared norm
//   ||psi(t)||^2 = sum_k |a_k|^2 exp(-lambda_k t)
// against the waiting-time threshold.
//
// When a sector_mask is supplied, Gamma must connect only basis states with
// identical bits under the mask (true for the two-ring generators, which are
// diagonal in the input-ring bits). The eigenproblem then factorizes into one
// small block per sector and the drift transform costs O(2^{3N}) instead of
// O(2^{4N}) per segment.
class JumpPropagator {
  public:
    explicit JumpPropagator(const Generator& g, long sector_mask = 0)
        : dim_(g.dim), jumps_(g.jumps), mask_(sector_mask) {
        SpMat gamma(dim_, dim_);
        for (const auto& j : jumps_) gamma = gamma + SpMat(j.rate * SpMat(j.op.adjoint()) * j.op);
        if (mask_ != 0) build_sectored(gamma);
        else build_dense(gamma);
    }

    // Evolve a normalized psi for duration t; psi is normalized on return.
    void run(Vec& psi, double t, Rng& rng) const {
        if (jumps_.empty() || t <= 0) return;
        double t_rem = t;
        Vec a(dim_);
        while (t_rem > 0) {
            forward(psi, a);
            gather_significant(a);
            const double u = rng.uniform_pos();
            if (norm2_at(t_rem) >= u) {
                decay(a, t_rem);
                backward(a, psi);
                psi /= psi.norm();
                return;
            }
            // bisection: f(0) = 1 - u > 0 >= f(t_rem)
            double lo = 0, hi = t_rem;
            for (int it = 0; it < 200 && (hi - lo) > 1e-10 * t; ++it) {
                const double mid = 0.5 * (lo + hi);
                (norm2_at(mid) >= u ? lo : hi) = mid;
            }
            const double t_jump = 0.5 * (lo + hi);
            decay(a, t_jump);
            backward(a, psi);
            do_jump(psi, rng);
            t_rem -= t_jump;
        }
    }

  private:
    void build_dense(const SpMat& gamma) {
        const Mat dense(gamma);
        Eigen::SelfAdjointEigenSolver<Mat> es(dense);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
        u_ = es.eigenvectors();
        lam_ = es.eigenvalues().cwiseMax(0.0);
    }

    void build_sectored(const SpMat& gamma) {
        std::unordered_map<long, int> key_to_sector;
        for (long i = 0; i < dim_; ++i) {
            const long key = i & mask_;
            auto [it, inserted] = key_to_sector.try_emplace(key, static_cast<int>(idx_.size()));
            if (inserted) idx_.emplace_back();
            idx_[static_cast<std::size_t>(it->second)].push_back(i);
        }
        std::vector<int> sector_of(static_cast<std::size_t>(dim_));
        std::vector<int> pos_of(static_cast<std::size_t>(dim_));
        for (std::size_t s = 0; s < idx_.size(); ++s)
            for (std::size_t p = 0; p < idx_[s].size(); ++p) {
                sector_of[static_cast<std::size_t>(idx_[s][p])] = static_cast<int>(s);
                pos_of[static_cast<std::size_t>(idx_[s][p])] = static_cast<int>(p);
            }
        std::vector<Mat> blocks;
        blocks.reserve(idx_.size());
        for (const auto& ix : idx_)
            blocks.emplace_back(Mat::Zero(static_cast<long>(ix.size()), static_cast<long>(ix.size())));
        for (long c = 0; c < gamma.outerSize(); ++c)
            for (SpMat::InnerIterator it(gamma, c); it; ++it) {
                if ((it.row() & mask_) != (it.col() & mask_))
                    throw std::invalid_argument("generator is not block-diagonal in the sector mask");
                const int s = sector_of[static_cast<std::size_t>(it.row())];
                blocks[static_cast<std::size_t>(s)](pos_of[static_cast<std::size_t>(it.row())],
                                                    pos_of[static_cast<std::size_t>(it.col())]) += it.value();
            }
        lam_.resize(dim_);
        offsets_.assign(idx_.size() + 1, 0);
        for (std::size_t s = 0; s < idx_.size(); ++s) {
            Eigen::SelfAdjointEigenSolver<Mat> es(blocks[s]);
            if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
            us_.push_back(es.eigenvectors());
            offsets_[s + 1] = offsets_[s] + static_cast<long>(idx_[s].size());
            lam_.segment(offsets_[s], static_cast<long>(idx_[s].size())) =
                es.eigenvalues().cwiseMax(0.0);
        }
    }

    // psi (basis order) -> a (eigen coordinates, sector-concatenated)
    void forward(const Vec& psi, Vec& a) const {
        if (mask_ == 0) { a.noalias() = u_.adjoint() * psi; return; }
        thread_local Vec scratch;
        for (std::size_t s = 0; s < idx_.size(); ++s) {
            const long m = static_cast<long>(idx_[s].size());
            scratch.resize(m);
            for (long p = 0; p < m; ++p) scratch[p] = psi[idx_[s][static_cast<std::size_t>(p)]];
            a.segment(offsets_[s], m).noalias() = us_[s].adjoint() * scratch;
        }
    }

    void backward(const Vec& a, Vec& psi) const {
        if (mask_ == 0) { psi.noalias() = u_ * a; return; }
        thread_local Vec scratch;
        for (std::size_t s = 0; s < idx_.size(); ++s) {
            const long m = static_cast<long>(idx_[s].size());
            scratch.noalias() = us_[s] * a.segment(offsets_[s], m);
            for (long p = 0; p < m; ++p) psi[idx_[s][static_cast<std::size_t>(p)]] = scratch[p];
        }
    }

    // Compact (weight, eigenvalue) list for the waiting-time solve; components
    // below 1e-18 of the total weight cannot move the norm at the 1e-10
    // tolerance and are dropped.
    void gather_significant(const Vec& a) const {
        sig_w_.clear();
        sig_l_.clear();
        double total = 0;
        for (long k = 0; k < dim_; ++k) total += std::norm(a[k]);
        const double cut = 1e-18 * total;
        for (long k = 0; k < dim_; ++k) {
            const double w = std::norm(a[k]);
            if (w > cut) { sig_w_.push_back(w); sig_l_.push_back(lam_[k]); }
        }
    }

    double norm2_at(double t) const {
        double s = 0;
        for (std::size_t k = 0; k < sig_w_.size(); ++k) s += sig_w_[k] * std::exp(-sig_l_[k] * t);
        return s;
    }
    void decay(Vec& a, double t) const {
        for (long k = 0; k < dim_; ++k) a[k] *= std::exp(-0.5 * lam_[k] * t);
    }
    void do_jump(Vec& psi, Rng& rng) const {
        thread_local std::vector<double> w;
        thread_local std::vector<Vec> cand;
        w.assign(jumps_.size(), 0.0);
        cand.assign(jumps_.size(), Vec());
        double total = 0;
        for (std::size_t i = 0; i < jumps_.size(); ++i) {
            cand[i] = jumps_[i].op * psi;
            w[i] = jumps_[i].rate * kernels::cnorm2(cand[i].data(), static_cast<std::size_t>(dim_));
            total += w[i];
        }
        if (total < 1e-28) throw std::runtime_error("numerical-failure: jump weights collapsed");
        double pick = rng.uniform() * total;
        std::size_t sel = jumps_.size() - 1;
        for (std::size_t i = 0; i < jumps_.size(); ++i) {
            pick -= w[i];
            if (pick <= 0) { sel = i; break; }
        }
        psi = cand[sel] / cand[sel].norm();
    }

    long dim_;
    std::vector<JumpOperator> jumps_;
    long mask_;
    // dense path
    Mat u_;
    Eigen::VectorXd lam_;
    // sectored path
    std::vector<std::vector<long>> idx_;
    std::vector<Mat> us_;
    std::vector<long> offsets_;
    // per-segment scratch
    mutable std::vector<double> sig_w_, sig_l_;
};

inline Generator scaled_generator(const Generator& g, double w) {
    Generator out;
    out.dim = g.dim;
    if (w <= 0) return out;
    out.jumps = g.jumps;
    for (auto& j : out.jumps) j.rate *= w;
    return out;
}

// Propagators for the two-ring cycle dynamics: the input/output roles
// alternate each cycle, and within a cycle the first half runs the mixed
// generator while the second half runs the classical part alone.
class TwoRingWfmc {
  public:
    TwoRingWfmc(const RuleSet& r, int n, double gamma, double phi) : n_(n), phi_(phi) {
        const double s = std::sin(phi * std::numbers::pi / 2);
        const double c = std::cos(phi * std::numbers::pi / 2);
        double wc = s * s, wq = c * c;
        if (wc < 1e-24) wc = 0;
        if (wq < 1e-24) wq = 0;
        for (int swap = 0; swap < 2; ++swap) {
            TwoRingLattice lat(n, swap == 1);
            const long input_mask = ((1L << n) - 1) << (swap == 1 ? n : 0);
            const Generator cl = classical_generator(r, lat, gamma);
            Generator mixed = scaled_generator(cl, wc);
            if (wq > 0) {
                const Generator rk = rk_generator(lat, gamma);
                const Generator rkw = scaled_generator(rk, wq);
                mixed.jumps.insert(mixed.jumps.end(), rkw.jumps.begin(), rkw.jumps.end());
            }
            mixed_[swap] = std::make_unique<JumpPropagator>(mixed, input_mask);
            if (wq > 0)
                classical_[swap] =
                    std::make_unique<JumpPropagator>(scaled_generator(cl, wc), input_mask);
        }
    }

    long dim() const { return 1L << (2 * n_); }

    // Basis state with both rings set to c0 (the natural cycle-zero input).
    Vec basis_state(const Config& c0) const {
        if (c0.n != n_) throw std::invalid_argument("ring size mismatch");
        long b = 0;
        for (int i = 0; i < n_; ++i)
            if (c0.get(i)) b |= (1L << i) | (1L << (n_ + i));
        Vec psi = Vec::Zero(dim());
        psi[b] = 1.0;
        return psi;
    }

    struct Snapshots {
        std::vector<Vec> half; // state at t_c/2 of each cycle
        std::vector<Vec> end;  // state at the end of each cycle
    };

    Snapshots evolve_trajectory(Vec psi, const CycleSchedule& sched, int cycles, Rng& rng,
                                bool keep_half = true, bool keep_end = true) const {
        if (std::abs(psi.norm() - 1.0) > 1e-10) throw std::invalid_argument("psi0 not normalized");
        if (sched.phi != phi_) throw std::invalid_argument("schedule phi differs from construction");
        Snapshots out;
        for (int c = 0; c < cycles; ++c) {
            const int o = c & 1;
            mixed_[o]->run(psi, 0.5 * sched.t_c, rng);
            if (keep_half) out.half.push_back(psi);
            (classical_[o] ? classical_[o] : mixed_[o])->run(psi, 0.5 * sched.t_c, rng);
            if (keep_end) out.end.push_back(psi);
        }
        return out;
    }

    // Marginal P(qubit q = 1) of a pure state.
    static Eigen::VectorXd site_marginals(const Vec& psi, int n_qubits) {
        Eigen::VectorXd p = Eigen::VectorXd::Zero(n_qubits);
        for (long b = 0; b < psi.size(); ++b) {
            const double w = std::norm(psi[b]);
            if (w == 0) continue;
            for (int q = 0; q < n_qubits; ++q)
                if ((b >> q) & 1) p[q] += w;
        }
        return p;
    }

  private:
    int n_;
    double phi_;
    std::unique_ptr<JumpPropagator> mixed_[2];
    std::unique_ptr<JumpPropagator> classical_[2]; // null when phi == 1
};

} // namespace qca
