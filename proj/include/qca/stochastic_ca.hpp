#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qca/eca.hpp"
#include "qca/history.hpp"
#include "qca/rng.hpp"

namespace qca {

// Two rings of equal size; one is the frozen input for the current cycle,
// the other collects updates.
struct RingPair {
    Config ring_a;
    Config ring_b;
    bool input_is_a = true;

    RingPair() = default;
    RingPair(const Config& a, const Config& b, bool in_a = true) : ring_a(a), ring_b(b), input_is_a(in_a) {
        if (a.n != b.n) throw std::invalid_argument("rings must have equal size");
    }
    // both rings start as copies of c0; influence of the hidden copy decays
    // after one cycle
    explicit RingPair(const Config& c0) : ring_a(c0), ring_b(c0), input_is_a(true) {}

    int n() const { return ring_a.n; }
    const Config& input() const { return input_is_a ? ring_a : ring_b; }
    const Config& output() const { return input_is_a ? ring_b : ring_a; }
    Config& output() { return input_is_a ? ring_b : ring_a; }
    void swap_roles() { input_is_a = !input_is_a; }
};

struct CycleSchedule {
    double gamma = 1.0;  // characteristic rate (1/time)
    double t_c = 1.0;    // cycle time
    double phi = 1.0;    // 0 = fully quantum, 1 = fully classical
    bool split_half = false; // quantum generator active in first half only

    CycleSchedule() = default;
    CycleSchedule(double g, double tc, double p = 1.0, bool split = false)
        : gamma(g), t_c(tc), phi(p), split_half(split) {
        if (g <= 0 || tc <= 0 || p < 0 || p > 1)
            throw std::invalid_argument("require gamma>0, t_c>0, phi in [0,1]");
    }

    double classical_rate() const {
        const double s = std::sin(phi * std::numbers::pi / 2);
        return gamma * s * s;
    }
    double quantum_rate() const {
        const double c = std::cos(phi * std::numbers::pi / 2);
        return gamma * c * c;
    }
    // survival probability of a site's old value over one full cycle
    double p_miss() const { return std::exp(-classical_rate() * t_c); }
};

// Continuous-time sampler: every output site carries an independent
// exponential clock; each firing overwrites the site with the rule output of
// the frozen input neighborhood (idempotent under repeats). Roles swap at t_c.
inline RingPair sample_cycle_gillespie(RingPair s, const RuleSet& r, const CycleSchedule& sched, Rng& rng) {
    const int n = s.n();
    const double rate = sched.classical_rate();
    const Config target = step(r, s.input());
    double t = rng.exponential(rate * n);
    while (t < sched.t_c) {
        const int site = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        s.output().set(site, target.get(site));
        t += rng.exponential(rate * n);
    }
    s.swap_roles();
    return s;
}

// Fast path: per-cycle the clock statistics reduce to a per-site Bernoulli
// miss. Draws one uniform per site, so it is not stream-compatible with the
// Gillespie sampler; distributions agree exactly.
inline RingPair sample_cycle_bernoulli(RingPair s, const RuleSet& r, double p_miss, Rng& rng) {
    if (p_miss < 0 || p_miss > 1) throw std::invalid_argument("p_miss must be in [0,1]");
    const Config target = step(r, s.input());
    Config& out = s.output();
    for (int i = 0; i < s.n(); ++i) {
        if (!rng.bernoulli(p_miss)) out.set(i, target.get(i));
    }
    s.swap_roles();
    return s;
}

enum class Sampler { bernoulli, gillespie };

// Row t = input ring after t cycles (cycle-end snapshots; the classical-only
// observable convention).
inline SpaceTimeHistory run_trajectory(const Config& c0, const RuleSet& r, const CycleSchedule& sched,
                                       int steps, Rng& rng, Sampler sampler = Sampler::bernoulli) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    SpaceTimeHistory h;
    h.n = c0.n;
    h.rows.reserve(static_cast<std::size_t>(steps) + 1);
    h.rows.push_back(c0);
    RingPair s(c0);
    const double p = sched.p_miss();
    for (int t = 0; t < steps; ++t) {
        s = sampler == Sampler::bernoulli ? sample_cycle_bernoulli(s, r, p, rng)
                                          : sample_cycle_gillespie(s, r, sched, rng);
        h.rows.push_back(s.input());
    }
    return h;
}

} // namespace qca
