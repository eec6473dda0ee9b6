#include <doctest.h>

#include <vector>

#include "qca/kernels.hpp"
#include "qca/rng.hpp"

using qca::kernels::Cplx;

namespace {
std::vector<Cplx> random_vec(qca::Rng& rng, std::size_t n) {
    std::vector<Cplx> v(n);
    for (auto& z : v) z = Cplx(rng.uniform() - 0.5, rng.uniform() - 0.5);
    return v;
}
} // namespace

TEST_CASE("scalar and avx2 kernels agree") {
    qca::Rng rng(99);
    for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 1001u}) {
        const auto x = random_vec(rng, n);
        auto y = random_vec(rng, n);
        const Cplx a(0.3, -1.2);

        CHECK(qca::kernels::cnorm2(x.data(), n) ==
              doctest::Approx(qca::kernels::scalar::cnorm2(x.data(), n)).epsilon(1e-13));

        auto y_ref = y;
        qca::kernels::scalar::caxpy(a, x.data(), y_ref.data(), n);
        qca::kernels::caxpy(a, x.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y[i].real() == doctest::Approx(y_ref[i].real()).epsilon(1e-13));
            CHECK(y[i].imag() == doctest::Approx(y_ref[i].imag()).epsilon(1e-13));
        }

        auto z = x;
        auto z_ref = x;
        qca::kernels::scalar::cscale(0.77, z_ref.data(), n);
        qca::kernels::cscale(0.77, z.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(z[i] == z_ref[i]);
    }
}

TEST_CASE("exp_decay_mul") {
    std::vector<Cplx> x{{1, 0}, {0, 2}, {3, -1}};
    std::vector<double> lam{0.0, 1.0, 2.0};
    qca::kernels::exp_decay_mul(lam.data(), 0.5, x.data(), 3);
    CHECK(x[0] == Cplx(1, 0));
    CHECK(x[1].imag() == doctest::Approx(2 * std::exp(-0.5)));
    CHECK(x[2].real() == doctest::Approx(3 * std::exp(-1.0)));
}
