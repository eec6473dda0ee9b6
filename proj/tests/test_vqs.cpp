#include <doctest.h>

#include <cmath>

#include "qca/rng.hpp"
#include "qca/stochastic_ca.hpp"
#include "qca/vqs.hpp"

using namespace qca;

namespace {
Mat random_density(Rng& rng, long dim) {
    Mat a(dim, dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) a(r, c) = Cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
    Mat rho = a * a.adjoint();
    return rho / rho.trace();
}
} // namespace

TEST_CASE("damping channel: completeness and limits") {
    for (double th : {0.0, 0.01, 0.1, 1.0, 10.0}) {
        const KrausPair k = kraus_damping(th);
        const Mat comp = k.k1.adjoint() * k.k1 + k.k2.adjoint() * k.k2;
        CHECK((comp - Mat::Identity(2, 2)).norm() < 1e-12);
    }
    const KrausPair id = kraus_damping(0.0);
    CHECK(id.k1.norm() == doctest::Approx(0.0));
    CHECK((id.k2 - Mat::Identity(2, 2)).norm() < 1e-14);
    const KrausPair full = kraus_damping(50.0);
    Mat rho = Mat::Zero(2, 2);
    rho(1, 1) = 1.0;
    const Mat out = full.k1 * rho * full.k1.adjoint() + full.k2 * rho * full.k2.adjoint();
    CHECK(out(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("dephasing channel: CPTP in the corrected form, not in the printed form") {
    for (double th : {0.0, 0.1, 1.0, 10.0}) {
        const KrausPair k = kraus_dephasing(th);
        const Mat comp = k.k1.adjoint() * k.k1 + k.k2.adjoint() * k.k2;
        CHECK((comp - Mat::Identity(2, 2)).norm() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Mat> es(choi_matrix(k), Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > -1e-10);
    }
    const KrausPair printed = kraus_dephasing(1.0, true);
    const Mat comp = printed.k1.adjoint() * printed.k1 + printed.k2.adjoint() * printed.k2;
    CHECK((comp - Mat::Identity(2, 2)).norm() > 1e-3);

    // coherence multiplier is 2 e^{-theta} - 1: full dephasing at theta = ln 2,
    // coherence inversion (unitary sigma_z) in the theta -> infinity limit
    auto coherence_factor = [](double th) {
        const KrausPair k = kraus_dephasing(th);
        Mat rho(2, 2);
        rho << 0.5, 0.4, 0.4, 0.5;
        const Mat out = k.k1 * rho * k.k1.adjoint() + k.k2 * rho * k.k2.adjoint();
        return out(0, 1).real() / 0.4;
    };
    CHECK(coherence_factor(std::log(2.0)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(coherence_factor(50.0) == doctest::Approx(-1.0));
    for (double th : {0.1, 0.5, 2.0})
        CHECK(coherence_factor(th) == doctest::Approx(2 * std::exp(-th) - 1));
}

TEST_CASE("channel layer preserves trace and hermiticity") {
    Rng rng(6);
    for (int rep = 0; rep < 5; ++rep) {
        const Mat rho = random_density(rng, 8);
        const Mat out = apply_channel_layer(rho, rng.uniform() * 2, rng.uniform() * 2, 3);
        CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
        CHECK((out - out.adjoint()).norm() < 1e-12);
    }
    // identity channels leave rho unchanged
    const Mat rho = random_density(rng, 8);
    CHECK((apply_channel_layer(rho, 0.0, 0.0, 3) - rho).norm() < 1e-12);
}

TEST_CASE("rydberg hamiltonian") {
    RydbergModel m;
    m.omega = 1.0;
    m.c6 = 100.0;
    m.positions = {{0, 0}, {1, 0}};
    CHECK(m.blockade_radius() == doctest::Approx(std::pow(100.0, 1.0 / 6.0)));

    const Mat h1 = rydberg_hamiltonian(m, {0});
    CHECK(h1(0, 1).real() == doctest::Approx(0.5));
    CHECK(h1(0, 0).real() == doctest::Approx(0.0));

    const Mat h2 = rydberg_hamiltonian(m, {0, 1});
    CHECK(h2(3, 3).real() == doctest::Approx(100.0)); // |11> shift = C6/1^6
    CHECK((h2 - h2.adjoint()).norm() < 1e-12);

    m.positions = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(rydberg_hamiltonian(m, {0, 1}), std::invalid_argument);
}

TEST_CASE("global unitary preserves purity; identity at zero times") {
    const RydbergModel m = two_rail_model(2);
    Rng rng(13);
    const Mat rho = random_density(rng, 16);
    CHECK((apply_global_unitary(rho, m, 0, 0) - rho).norm() < 1e-12);
    const Mat out = apply_global_unitary(rho, m, 0.3, 0.7);
    CHECK((out * out).trace().real() == doctest::Approx((rho * rho).trace().real()).epsilon(1e-10));
    CHECK(out.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("rydberg blockade suppresses simultaneous excitation") {
    // two adjacent sites well inside r_b ~ 2.15: after a pi-time global pulse
    // from |00>, double occupation stays far below the non-interacting value
    RydbergModel m;
    m.omega = 1.0;
    m.c6 = 100.0;
    m.positions = {{0, 0}, {1, 0}};
    const Mat h = rydberg_hamiltonian(m, {0, 1});
    Mat rho = Mat::Zero(4, 4);
    rho(0, 0) = 1.0;
    const double t_pi = std::numbers::pi / m.omega;
    const Mat u = hermitian_exp(h, t_pi);
    const Mat out = u * rho * u.adjoint();
    const double p11 = out(3, 3).real();
    CHECK(p11 < 0.01);
    CHECK(p11 == doctest::Approx(3.1651183e-05).epsilon(1e-4)); // pinned regression value
}

TEST_CASE("ansatz maps density matrices to density matrices") {
    const RydbergModel m = two_rail_model(3);
    Rng rng(8);
    const Mat rho = random_density(rng, 64);
    VariationalParams p(2);
    p[0] = {{0.3, -0.2, 0.8, 0.1, -0.6, 0.4}, {0.2, 0.9, -0.1, 0.5, 0.3, -0.7}, 0.5, 0.4, 0.2, 0.1};
    p[1] = {{1.1, 0.7, -0.4, 0.2, 0.6, -0.9}, {0.05, 0.9, 0.3, -0.2, 0.8, 0.1}, 0.05, 0.9, 0.6, 0.3};
    const Mat out = apply_ansatz(rho, p, m);
    CHECK(flatten(p).size() == 2 * static_cast<std::size_t>(params_per_layer(6)));
    const VariationalParams q = unflatten(flatten(p), 6);
    CHECK(q[1].ay[4] == doctest::Approx(0.8));
    CHECK(q[0].t2 == doctest::Approx(0.1));
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
    CHECK((out - out.adjoint()).norm() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat> es(out, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("heisenberg action: unitality and duality") {
    TwoRingLattice lat(2);
    const Generator g = mixed_generator(0.4, classical_generator(rule_from_number(137), lat, 1.0),
                                        rk_generator(lat, 1.0));
    const long dim = lat.dim();
    CHECK(heisenberg_action(g, Mat::Identity(dim, dim)).norm() < 1e-12);

    Rng rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat rho = random_density(rng, dim);
        Mat o(dim, dim);
        for (long r = 0; r < dim; ++r)
            for (long c = 0; c < dim; ++c) o(r, c) = Cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
        o = 0.5 * (o + o.adjoint()).eval();
        const double lhs = (master_rhs(g, rho) * o).trace().real();
        const double rhs = (rho * heisenberg_action(g, o)).trace().real();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("single-qubit damping adjoint on sigma_z") {
    Generator g;
    g.dim = 2;
    SpMat sm(2, 2);
    sm.insert(0, 1) = 1.0;
    g.jumps.push_back({sm, 1.0, 0, JumpOperator::Kind::classical});
    Mat sz = Mat::Zero(2, 2);
    sz(0, 0) = 1.0; sz(1, 1) = -1.0;
    const Mat l = heisenberg_action(g, sz);
    // c^dag sz c - {c^dag c, sz}/2 with c = |0><1|: acts only on |1><1|
    CHECK(l(0, 0).real() == doctest::Approx(0.0));
    CHECK(l(1, 1).real() == doctest::Approx(2.0));
    CHECK(std::abs(l(0, 1)) < 1e-14);
}

TEST_CASE("cost_fv: zero at a fixed point of a zero generator") {
    Generator g;
    g.dim = 4;
    // tiny observable set by hand on 2 qubits
    std::vector<Mat> small;
    Mat sz = Mat::Zero(2, 2);
    sz(0, 0) = 1.0; sz(1, 1) = -1.0;
    small.push_back(embed1(sz, 0, 2));
    small.push_back(embed1(sz, 1, 2));
    const CostContext ctx = make_cost_context(g, small);
    Rng rng(23);
    const Mat rho = random_density(rng, 4);
    CHECK(cost_fv(rho, rho, 0.1, ctx) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("observable set size at three sites per ring") {
    const auto obs = neighborhood_observables(3);
    // full 4^3 words on each ring, deduplicated across neighborhoods
    CHECK(obs.size() == 127); // identity word shared between the two rings
}

TEST_CASE("layerwise optimizer recovers a quadratic minimum") {
    auto cost = [](const std::vector<double>& v) {
        double f = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double d = v[i] - 0.3 * static_cast<double>(i + 1);
            f += (1.0 + static_cast<double>(i)) * d * d;
        }
        return f;
    };
    std::vector<double> theta(6, 0.0);
    std::vector<std::pair<double, double>> bounds(6, {-2.0, 2.0});
    const auto res = optimize_layerwise(cost, theta, bounds, 3, 30, 60);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(res.theta[i] == doctest::Approx(0.3 * static_cast<double>(i + 1)).epsilon(1e-3));
    CHECK(res.cost < 1e-6);

    // one block == whole-vector optimization
    const auto res1 = optimize_layerwise(cost, theta, bounds, 6, 30, 60);
    CHECK(res1.cost < 1e-6);
}

TEST_CASE("fidelity error") {
    Rng rng(31);
    const Mat rho = random_density(rng, 4);
    CHECK(fidelity_error(rho, rho) == doctest::Approx(0.0).epsilon(1e-8));

    Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK(fidelity_error(p0, p1) == doctest::Approx(1.0));

    // symmetry and unitary invariance
    const Mat a = random_density(rng, 4), b = random_density(rng, 4);
    CHECK(fidelity_error(a, b) == doctest::Approx(fidelity_error(b, a)).epsilon(1e-9));
    const RydbergModel m = two_rail_model(1);
    const Mat u = hermitian_exp(rydberg_hamiltonian(m, {0, 1}), 0.37);
    CHECK(fidelity_error(u * a * u.adjoint(), u * b * u.adjoint()) ==
          doctest::Approx(fidelity_error(a, b)).epsilon(1e-9));
}
