#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qca/complexity.hpp"
#include "qca/qop.hpp"
#include "qca/stochastic_ca.hpp"
#include "qca/vqs.hpp"
#include "qca/wfmc.hpp"

namespace qca {

// ---------------------------------------------------------------------------
// Classical unpredictability pipeline: one (rule, N, gamma*t_c) point.
// ---------------------------------------------------------------------------

struct ClassicalParams {
    int rule = 110;
    int n_sites = 17;
    double gamma = 1.0;
    double t_c = 10.0;
    int n_states = 20;      // Gray-code indices 1..n_states (index 0 is skipped:
                            // its singular all-zero orbit is not Gray-adjacent
                            // to a one-bit flip of a generic state)
    int cycles = 150;       // T
    int samples = 50;       // trajectories per initial state; split into two
                            // halves for the sign-debiased pair estimator
    int stride = 1;         // evaluation-time stride for the compression series
    std::uint64_t seed = 777;
    int n_boot = 1000;
    Sampler sampler = Sampler::bernoulli;
};

struct ClassicalPoint {
    SlopeStats slope;
    std::vector<double> ts;                     // evaluation times (cycles)
    std::vector<std::vector<double>> mean_len;  // per state: mean C(S_j(t)) over samples
};

namespace detail {

// Compression memoization: repeated histories (ubiquitous at large gamma*t_c,
// where p_miss ~ e^{-gamma t_c} makes most trajectories noise-free copies)
// hash to the same 64-bit FNV-1a key.
class CompressCache {
  public:
    int len(std::string_view s) {
        std::uint64_t h = 1469598103934665603ULL;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        auto [it, inserted] = cache_.try_emplace(h, 0);
        if (inserted) it->second = static_cast<int>(compress_len(s));
        return it->second;
    }

  private:
    std::unordered_map<std::uint64_t, int> cache_;
};

inline std::vector<double> eval_times(int cycles, int stride) {
    std::vector<double> ts;
    for (int t = stride; t <= cycles; t += stride) ts.push_back(t);
    return ts;
}

} // namespace detail

inline ClassicalPoint classical_point(const ClassicalParams& p) {
    if (p.n_states < 2 || p.samples < 2 || p.samples % 2 != 0)
        throw std::invalid_argument("need >= 2 initial states and an even number of samples");
    const RuleSet r = rule_from_number(p.rule);
    const CycleSchedule sched(p.gamma, p.t_c, 1.0);
    const std::vector<double> ts = detail::eval_times(p.cycles, p.stride);
    const std::size_t nt = ts.size();

    detail::CompressCache cache;
    const std::size_t half = static_cast<std::size_t>(p.samples) / 2;
    std::vector<std::vector<double>> half_a, half_b, mean_len;
    for (int j = 1; j <= p.n_states; ++j) {
        const Config c0 = gray_code_config(static_cast<std::uint64_t>(j), p.n_sites);
        std::vector<double> acc_a(nt, 0.0), acc_b(nt, 0.0);
        for (int m = 0; m < p.samples; ++m) {
            Rng rng(derive_seed(derive_seed(p.seed, 1, static_cast<std::uint64_t>(j)), 2,
                                static_cast<std::uint64_t>(m)));
            const SpaceTimeHistory h = run_trajectory(c0, r, sched, p.cycles, rng, p.sampler);
            const std::string full = encode_history(h, p.cycles);
            auto& acc = static_cast<std::size_t>(m) < half ? acc_a : acc_b;
            for (std::size_t i = 0; i < nt; ++i) {
                const std::size_t chars =
                    (static_cast<std::size_t>(ts[i]) + 1) * static_cast<std::size_t>(p.n_sites);
                acc[i] += cache.len(std::string_view(full).substr(0, chars));
            }
        }
        std::vector<double> mean(nt);
        for (std::size_t i = 0; i < nt; ++i) {
            acc_a[i] /= static_cast<double>(half);
            acc_b[i] /= static_cast<double>(half);
            mean[i] = 0.5 * (acc_a[i] + acc_b[i]);
        }
        half_a.push_back(std::move(acc_a));
        half_b.push_back(std::move(acc_b));
        mean_len.push_back(std::move(mean));
    }

    ClassicalPoint out;
    out.ts = ts;
    out.mean_len = std::move(mean_len);
    const auto pairs = pair_debiased_diffs(half_a, half_b);
    const FitWindow w{0.5 * p.cycles, static_cast<double>(p.cycles)};
    out.slope = slope_with_bootstrap(pairs, ts, w, p.n_boot, derive_seed(p.seed, 3, 0));
    return out;
}

// ---------------------------------------------------------------------------
// Quantum (wave-function Monte-Carlo) pipeline: one (t_c, phi) grid point.
// Majority strings are extracted from the t_c/2 snapshots of the output ring;
// negativity is evaluated across the input-ring cut on the trajectory-ensemble
// density matrix of one designated initial state.
// ---------------------------------------------------------------------------

struct QuantumParams {
    int rule = 137;
    int n_sites = 5;
    double gamma = 1.0;
    double t_c = 10.0;
    double phi = 0.6;
    int n_states = 12;      // Gray-code indices 1..n_states
    int cycles = 40;
    int trajectories = 32;  // per initial state; split into halves for the
                            // debiased majority-string estimator
    std::uint64_t seed = 777;
    int n_boot = 1000;
    int neg_state_index = 1; // Gray index whose ensemble provides negativity
    int stride = 1;
};

struct QuantumPoint {
    SlopeStats slope;
    std::vector<double> ts;
    std::vector<double> neg_by_cycle; // ensemble negativity at t_c/2 of each cycle
    double neg_late_avg = 0;          // mean over cycles in (T/2, T]
    std::vector<Config> majority_rows; // majority strings of the designated state
};

inline QuantumPoint quantum_point(const QuantumParams& p) {
    if (p.n_states < 2 || p.trajectories < 2 || p.trajectories % 2 != 0)
        throw std::invalid_argument("need >= 2 initial states and an even number of trajectories");
    const RuleSet r = rule_from_number(p.rule);
    const CycleSchedule sched(p.gamma, p.t_c, p.phi);
    const TwoRingWfmc sim(r, p.n_sites, p.gamma, p.phi);
    const int n = p.n_sites;
    const std::size_t nc = static_cast<std::size_t>(p.cycles);
    const int half = p.trajectories / 2;

    detail::CompressCache cache;
    const std::vector<double> ts = detail::eval_times(p.cycles, p.stride);
    std::vector<std::vector<double>> len_a, len_b;
    std::vector<Vec> neg_states; // t_c/2 snapshots of the designated ensemble
    QuantumPoint out;
    out.ts = ts;

    for (int j = 1; j <= p.n_states; ++j) {
        const Config c0 = gray_code_config(static_cast<std::uint64_t>(j), n);
        // accumulated output-ring occupation per (cycle, site), per half
        Eigen::MatrixXd occ_a = Eigen::MatrixXd::Zero(p.cycles, n);
        Eigen::MatrixXd occ_b = Eigen::MatrixXd::Zero(p.cycles, n);
        for (int m = 0; m < p.trajectories; ++m) {
            Rng rng(derive_seed(derive_seed(p.seed, 4, static_cast<std::uint64_t>(j)), 5,
                                static_cast<std::uint64_t>(m)));
            const auto snaps = sim.evolve_trajectory(sim.basis_state(c0), sched, p.cycles, rng,
                                                     true, false);
            Eigen::MatrixXd& occ = m < half ? occ_a : occ_b;
            for (std::size_t c = 0; c < nc; ++c) {
                const Eigen::VectorXd marg = TwoRingWfmc::site_marginals(snaps.half[c], 2 * n);
                // output ring at cycle c: high bits for even cycles, low for odd
                const int base = (c % 2 == 0) ? n : 0;
                for (int i = 0; i < n; ++i) occ(static_cast<long>(c), i) += marg[base + i];
            }
            if (j == p.neg_state_index)
                for (std::size_t c = 0; c < nc; ++c) neg_states.push_back(snaps.half[c]);
        }
        // majority history per half: row 0 = c0, then one row per cycle
        auto to_history = [&](const Eigen::MatrixXd& occ, int m_half) {
            SpaceTimeHistory h;
            h.n = n;
            h.rows.push_back(c0);
            for (int c = 0; c < p.cycles; ++c) {
                Config row(0, n);
                for (int i = 0; i < n; ++i)
                    row.set(i, occ(c, i) > 0.5 * m_half ? 1 : 0); // ties toward 0
                h.rows.push_back(row);
            }
            return h;
        };
        const SpaceTimeHistory ha = to_history(occ_a, half), hb = to_history(occ_b, half);
        if (j == p.neg_state_index) {
            const Eigen::MatrixXd occ = occ_a + occ_b;
            out.majority_rows.clear();
            for (int c = 0; c < p.cycles; ++c) {
                Config row(0, n);
                for (int i = 0; i < n; ++i)
                    row.set(i, occ(c, i) > 0.5 * p.trajectories ? 1 : 0);
                out.majority_rows.push_back(row);
            }
        }
        const std::string ea = encode_history(ha, p.cycles), eb = encode_history(hb, p.cycles);
        std::vector<double> la(ts.size()), lb(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const std::size_t chars =
                (static_cast<std::size_t>(ts[i]) + 1) * static_cast<std::size_t>(n);
            la[i] = cache.len(std::string_view(ea).substr(0, chars));
            lb[i] = cache.len(std::string_view(eb).substr(0, chars));
        }
        len_a.push_back(std::move(la));
        len_b.push_back(std::move(lb));
    }

    const auto pairs = pair_debiased_diffs(len_a, len_b);
    const FitWindow w{0.5 * p.cycles, static_cast<double>(p.cycles)};
    out.slope = slope_with_bootstrap(pairs, ts, w, p.n_boot, derive_seed(p.seed, 6, 0));

    // per-cycle ensemble negativity across the input-ring cut (the cut is
    // symmetric: both rings give identical partial-transpose spectra)
    const long mask_low = (1L << n) - 1;
    std::vector<Vec> cycle_states(static_cast<std::size_t>(p.trajectories));
    double late_acc = 0;
    int late_cnt = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        for (int m = 0; m < p.trajectories; ++m)
            cycle_states[static_cast<std::size_t>(m)] = neg_states[static_cast<std::size_t>(m) * nc + c];
        const double neg = negativity(ensemble_density(cycle_states), mask_low, 2 * n);
        out.neg_by_cycle.push_back(neg);
        if (static_cast<double>(c + 1) > 0.5 * p.cycles) { late_acc += neg; ++late_cnt; }
    }
    out.neg_late_avg = late_cnt > 0 ? late_acc / late_cnt : 0.0;
    return out;
}

// ---------------------------------------------------------------------------
// Variational benchmark: carry the optimized variational state forward for a
// fixed number of timesteps of size tau under the mixed generator, comparing
// against the dense master-equation integration at every checkpoint.
// ---------------------------------------------------------------------------

struct VqsParams {
    int rule = 137;
    int n_sites = 3;
    double gamma = 1.0;
    double t_c = 10.0;
    double phi = 0.5;
    int depth = 3;
    int steps = 2;
    double tau = 0.5;
    std::string c0 = "100";
    std::uint64_t seed = 777;
    int max_sweeps = 10;
    int max_block_iters = 2;
    int polish_sweeps = 2;
};

struct VqsStepReport {
    double t = 0;
    double f_v = 0;
    double epsilon = 0;
    double neg_v = 0;
    double neg_exact = 0;
    bool converged = true;
    std::vector<double> theta;
};

struct VqsBenchReport {
    std::vector<VqsStepReport> steps;
};

inline VqsBenchReport vqs_benchmark(const VqsParams& p) {
    const RuleSet r = rule_from_number(p.rule);
    const TwoRingLattice lat(p.n_sites, false);
    const Generator gen = mixed_generator(p.phi, classical_generator(r, lat, p.gamma),
                                          rk_generator(lat, p.gamma));
    const RydbergModel model = two_rail_model(p.n_sites);
    const CostContext ctx = make_cost_context(gen, neighborhood_observables(p.n_sites));
    const int n_q = 2 * p.n_sites;
    const long dim = 1L << n_q;
    const long mask_low = (1L << p.n_sites) - 1;

    // initial basis state: both rings carry c0
    const Config c0 = Config::from_string(p.c0);
    long b = 0;
    for (int i = 0; i < p.n_sites; ++i)
        if (c0.get(i)) b |= (1L << i) | (1L << (p.n_sites + i));
    Mat rho_exact = Mat::Zero(dim, dim);
    rho_exact(b, b) = 1.0;
    Mat rho_v = rho_exact;

    const int ppl = params_per_layer(n_q);
    std::vector<std::pair<double, double>> bounds;
    for (int l = 0; l < p.depth; ++l) {
        for (int q = 0; q < 2 * n_q; ++q)
            bounds.emplace_back(-std::numbers::pi, std::numbers::pi); // ax_q, ay_q
        bounds.emplace_back(0.0, 3.0);                                // theta_d
        bounds.emplace_back(0.0, 3.0);                                // theta_p
        bounds.emplace_back(0.0, 2.0);                                // t1
        bounds.emplace_back(0.0, 2.0);                                // t2
    }

    Rng jitter(derive_seed(p.seed, 7, 0));
    VqsBenchReport report;
    for (int s = 0; s < p.steps; ++s) {
        rho_exact = integrate_master(gen, rho_exact, p.tau);
        const Mat rho_prev = rho_v;
        auto cost = [&](const std::vector<double>& theta) {
            return cost_fv(apply_ansatz(rho_prev, unflatten(theta, n_q), model), rho_prev, p.tau, ctx);
        };
        auto cost_sq = [&](const std::vector<double>& theta) {
            return cost_fv_sq(apply_ansatz(rho_prev, unflatten(theta, n_q), model), rho_prev, p.tau, ctx);
        };
        std::vector<double> theta0(static_cast<std::size_t>(p.depth * ppl), 0.0);
        for (std::size_t i = 0; i < theta0.size(); ++i) {
            theta0[i] = 1e-3 * (2 * jitter.uniform() - 1);
            if (bounds[i].first >= 0.0) theta0[i] = std::abs(theta0[i]);
        }
        // smooth squared-residual stage, then polish on the absolute-value cost
        const OptimizeResult pre = optimize_layerwise(cost_sq, theta0, bounds, ppl,
                                                      p.max_sweeps, p.max_block_iters);
        const OptimizeResult res = optimize_layerwise(cost, pre.theta, bounds, ppl,
                                                      p.polish_sweeps, p.max_block_iters);
        rho_v = apply_ansatz(rho_prev, unflatten(res.theta, n_q), model);

        VqsStepReport step;
        step.t = (s + 1) * p.tau;
        step.f_v = res.cost;
        step.epsilon = fidelity_error(rho_v, rho_exact);
        step.neg_v = negativity(rho_v, mask_low, n_q);
        step.neg_exact = negativity(rho_exact, mask_low, n_q);
        step.converged = res.converged;
        step.theta = res.theta;
        report.steps.push_back(std::move(step));
    }
    return report;
}

} // namespace qca
