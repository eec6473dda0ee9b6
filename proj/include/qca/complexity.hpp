#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qca/compress.hpp"
#include "qca/history.hpp"
#include "qca/rng.hpp"

namespace qca {

// Mean absolute difference of consecutive compressed lengths at one time,
// states ordered by Gray-code index.
inline double delta_n(const std::vector<double>& lengths) {
    if (lengths.size() < 2) throw std::invalid_argument("delta_n needs at least two states");
    double acc = 0;
    for (std::size_t j = 0; j + 1 < lengths.size(); ++j) acc += std::abs(lengths[j + 1] - lengths[j]);
    return acc / static_cast<double>(lengths.size() - 1);
}

struct FitWindow {
    double t_min = 0;
    double t_max = 0;
};

// Ordinary least-squares slope of y(t) over the window.
inline double slope_s_delta(const std::vector<double>& ts, const std::vector<double>& delta,
                            const FitWindow& w) {
    if (ts.size() != delta.size()) throw std::invalid_argument("series size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < w.t_min || ts[i] > w.t_max) continue;
        sx += ts[i]; sy += delta[i]; sxx += ts[i] * ts[i]; sxy += ts[i] * delta[i];
        ++m;
    }
    if (m < 10) throw std::invalid_argument("fit window must contain at least 10 points");
    const double dm = static_cast<double>(m);
    const double den = dm * sxx - sx * sx;
    if (den <= 0) throw std::invalid_argument("degenerate fit window");
    return (dm * sxy - sx * sy) / den;
}

struct SlopeStats {
    double s_delta = 0;
    double stderr_boot = 0;
    std::vector<double> delta; // series entering the fit, one per eval time
};

namespace detail {
inline double ols_slope(const std::vector<double>& ts, const std::vector<double>& y,
                        const std::vector<std::size_t>& idx) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i : idx) {
        sx += ts[i]; sy += y[i]; sxx += ts[i] * ts[i]; sxy += ts[i] * y[i];
    }
    const double m = static_cast<double>(idx.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}
} // namespace detail

// Slope of the mean-over-pairs difference series plus a bootstrap error bar
// obtained by resampling initial-state pairs with replacement.
// `pair_series[p][i]` is the (possibly debiased) length difference of pair p
// at eval time ts[i].
inline SlopeStats slope_with_bootstrap(const std::vector<std::vector<double>>& pair_series,
                                       const std::vector<double>& ts, const FitWindow& w,
                                       int n_boot = 1000, std::uint64_t boot_seed = 0x5deece66dULL) {
    const std::size_t np = pair_series.size();
    if (np == 0) throw std::invalid_argument("no pairs");
    std::vector<std::size_t> widx;
    for (std::size_t i = 0; i < ts.size(); ++i)
        if (ts[i] >= w.t_min && ts[i] <= w.t_max) widx.push_back(i);
    if (widx.size() < 10) throw std::invalid_argument("fit window must contain at least 10 points");

    SlopeStats out;
    out.delta.assign(ts.size(), 0.0);
    for (const auto& p : pair_series)
        for (std::size_t i = 0; i < ts.size(); ++i) out.delta[i] += p[i];
    for (auto& v : out.delta) v /= static_cast<double>(np);
    out.s_delta = detail::ols_slope(ts, out.delta, widx);

    Rng rng(boot_seed);
    std::vector<double> mean(ts.size());
    double acc = 0, acc2 = 0;
    for (int b = 0; b < n_boot; ++b) {
        std::fill(mean.begin(), mean.end(), 0.0);
        for (std::size_t p = 0; p < np; ++p) {
            const auto& row = pair_series[rng.below(np)];
            for (std::size_t i : widx) mean[i] += row[i];
        }
        for (std::size_t i : widx) mean[i] /= static_cast<double>(np);
        const double s = detail::ols_slope(ts, mean, widx);
        acc += s;
        acc2 += s * s;
    }
    const double nb = n_boot;
    out.stderr_boot = std::sqrt(std::max(0.0, acc2 / nb - (acc / nb) * (acc / nb)));
    return out;
}

// Plain Eq.-style pair differences |C_j - C_{j+1}| from per-state mean lengths.
inline std::vector<std::vector<double>> pair_abs_diffs(const std::vector<std::vector<double>>& lengths) {
    if (lengths.size() < 2) throw std::invalid_argument("need at least two states");
    std::vector<std::vector<double>> d;
    for (std::size_t j = 0; j + 1 < lengths.size(); ++j) {
        std::vector<double> row(lengths[j].size());
        for (std::size_t i = 0; i < row.size(); ++i)
            row[i] = std::abs(lengths[j + 1][i] - lengths[j][i]);
        d.push_back(std::move(row));
    }
    return d;
}

// Split-half debiased pair differences. |mean difference| of finitely many
// noisy samples has a positive bias ~ sigma/sqrt(m) even when the true means
// coincide; crossing the sign of one independent half with the magnitude of
// the other removes it. Reduces to the plain |difference| when sampling noise
// vanishes. half_a/half_b are per-state mean lengths over disjoint sample halves.
inline std::vector<std::vector<double>> pair_debiased_diffs(const std::vector<std::vector<double>>& half_a,
                                                            const std::vector<std::vector<double>>& half_b) {
    if (half_a.size() != half_b.size() || half_a.size() < 2)
        throw std::invalid_argument("need two equal half-length matrices with >= 2 states");
    auto sgn = [](double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); };
    std::vector<std::vector<double>> d;
    for (std::size_t j = 0; j + 1 < half_a.size(); ++j) {
        std::vector<double> row(half_a[j].size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double da = half_a[j + 1][i] - half_a[j][i];
            const double db = half_b[j + 1][i] - half_b[j][i];
            row[i] = 0.5 * (sgn(da) * db + sgn(db) * da);
        }
        d.push_back(std::move(row));
    }
    return d;
}

// Per-site majority bit over an ensemble of histories at one time; ties
// break toward 0.
inline Config majority_string(const std::vector<SpaceTimeHistory>& ensemble, int t) {
    if (ensemble.empty()) throw std::invalid_argument("empty ensemble");
    const int n = ensemble.front().n;
    Config out(0, n);
    for (int i = 0; i < n; ++i) {
        int ones = 0;
        for (const auto& h : ensemble) {
            if (h.n != n) throw std::invalid_argument("mixed ring sizes in ensemble");
            ones += h.rows[static_cast<std::size_t>(t)].get(i);
        }
        out.set(i, 2 * ones > static_cast<int>(ensemble.size()) ? 1 : 0);
    }
    return out;
}

// --- finite-size scaling -------------------------------------------------

struct FssPoint {
    int n_sites = 0;      // ring size
    double s_ref = 0;     // S_delta deep in the large-cycle-time phase
    double transition = 0; // per-size transition estimate (in gamma*t_c)
};

struct FssResult {
    double transition = 0;
    double stderr_fit = 0;
    std::vector<int> retained; // sizes surviving the local-maximum filter
};

// Keeps only sizes at which s_ref is a (non-strict) interior local maximum,
// then extrapolates the per-size transitions linearly in 1/N.
inline FssResult fss_local_maxima(std::vector<FssPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const FssPoint& a, const FssPoint& b) { return a.n_sites < b.n_sites; });
    std::vector<FssPoint> keep;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (pts[i].s_ref >= pts[i - 1].s_ref && pts[i].s_ref >= pts[i + 1].s_ref) keep.push_back(pts[i]);
    if (keep.size() < 3) throw std::runtime_error("insufficient-data: fewer than 3 local maxima");

    // OLS of transition vs 1/N; the 1/N -> 0 intercept is the estimate
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(keep.size());
    for (const auto& p : keep) {
        const double x = 1.0 / p.n_sites;
        sx += x; sy += p.transition; sxx += x * x; sxy += x * p.transition;
    }
    const double den = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / den;
    const double icept = (sy - slope * sx) / m;
    double ss = 0;
    for (const auto& p : keep) {
        const double r = p.transition - (icept + slope / p.n_sites);
        ss += r * r;
    }
    const double dof = std::max(1.0, m - 2);
    const double var_icept = (ss / dof) * (sxx / den);
    FssResult out;
    out.transition = icept;
    out.stderr_fit = std::sqrt(var_icept);
    for (const auto& p : keep) out.retained.push_back(p.n_sites);
    return out;
}

// Weighted pool-adjacent-violators fit (nondecreasing).
inline std::vector<double> isotonic_fit(const std::vector<double>& y, const std::vector<double>& wgt) {
    struct Block { double val, w; std::size_t len; };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < y.size(); ++i) {
        blocks.push_back({y[i], wgt[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].val > blocks.back().val) {
            Block b = blocks.back(); blocks.pop_back();
            Block& a = blocks.back();
            const double w = a.w + b.w;
            a.val = (a.val * a.w + b.val * b.w) / w;
            a.w = w;
            a.len += b.len;
        }
    }
    std::vector<double> out;
    out.reserve(y.size());
    for (const auto& b : blocks) out.insert(out.end(), b.len, b.val);
    return out;
}

// Per-size transition: isotonic-smooth S_delta(t_c), then locate the
// half-plateau crossing by linear interpolation.
inline double transition_estimate(const std::vector<double>& t_cs, const std::vector<double>& s,
                                  const std::vector<double>& sigma) {
    if (t_cs.size() != s.size() || t_cs.size() < 3) throw std::invalid_argument("need >= 3 grid points");
    std::vector<double> w(s.size(), 1.0);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (i < sigma.size() && sigma[i] > 0) w[i] = 1.0 / (sigma[i] * sigma[i]);
    const auto iso = isotonic_fit(s, w);
    const double thr = 0.5 * iso.back();
    if (thr <= 0) throw std::runtime_error("no increasing signal in S_delta(t_c)");
    for (std::size_t i = 1; i < iso.size(); ++i) {
        if (iso[i] >= thr && iso[i - 1] < thr) {
            const double f = (thr - iso[i - 1]) / (iso[i] - iso[i - 1]);
            return t_cs[i - 1] + f * (t_cs[i] - t_cs[i - 1]);
        }
    }
    return t_cs.front(); // already above threshold everywhere
}

} // namespace qca
