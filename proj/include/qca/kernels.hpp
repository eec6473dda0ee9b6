#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace qca::kernels {

using Cplx = std::complex<double>;

// Scalar reference kernels. The AVX2 variants below must agree with these to
// floating-point reassociation tolerance; the equivalence test pins that.
namespace scalar {

inline double cnorm2(const Cplx* x, std::size_t n) {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

inline void caxpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

inline void cscale(double a, Cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

// x[i] *= exp(-lam[i] * t) elementwise; the drift step in an eigenbasis
inline void exp_decay_mul(const double* lam, double t, Cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= std::exp(-lam[i] * t);
}

} // namespace scalar

#if defined(__AVX2__) || defined(__x86_64__)
namespace avx2 {

__attribute__((target("avx2,fma")))
inline double cnorm2(const Cplx* x, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(x);
    const std::size_t m = 2 * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d v = _mm256_loadu_pd(p + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
    for (; i < m; ++i) s += p[i] * p[i];
    return s;
}

__attribute__((target("avx2,fma")))
inline void caxpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) {
    const double ar = a.real(), ai = a.imag();
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_setr_pd(-ai, ai, -ai, ai);
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const std::size_t m = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d vx = _mm256_loadu_pd(px + i);
        const __m256d vy = _mm256_loadu_pd(py + i);
        // (ar + i ai)(xr + i xi) = (ar xr - ai xi) + i(ar xi + ai xr)
        const __m256d sw = _mm256_permute_pd(vx, 0b0101); // [xi, xr, xi, xr]
        const __m256d r = _mm256_fmadd_pd(var, vx, _mm256_fmadd_pd(vai, sw, vy));
        _mm256_storeu_pd(py + i, r);
    }
    for (std::size_t k = i / 2; k < n; ++k) y[k] += a * x[k];
}

__attribute__((target("avx2,fma")))
inline void cscale(double a, Cplx* x, std::size_t n) {
    double* p = reinterpret_cast<double*>(x);
    const std::size_t m = 2 * n;
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(va, _mm256_loadu_pd(p + i)));
    for (; i < m; ++i) p[i] *= a;
}

} // namespace avx2
#endif

// Runtime dispatch: resolved once, per process. exp_decay_mul stays scalar —
// libm exp dominates and vectorizing it would change results.
inline bool have_avx2() {
#if defined(__x86_64__)
    static const bool v = __builtin_cpu_supports("avx2");
    return v;
#else
    return false;
#endif
}

inline double cnorm2(const Cplx* x, std::size_t n) {
#if defined(__x86_64__)
    if (have_avx2()) return avx2::cnorm2(x, n);
#endif
    return scalar::cnorm2(x, n);
}

inline void caxpy(Cplx a, const Cplx* x, Cplx* y, std::size_t n) {
#if defined(__x86_64__)
    if (have_avx2()) { avx2::caxpy(a, x, y, n); return; }
#endif
    scalar::caxpy(a, x, y, n);
}

inline void cscale(double a, Cplx* x, std::size_t n) {
#if defined(__x86_64__)
    if (have_avx2()) { avx2::cscale(a, x, n); return; }
#endif
    scalar::cscale(a, x, n);
}

inline void exp_decay_mul(const double* lam, double t, Cplx* x, std::size_t n) {
    scalar::exp_decay_mul(lam, t, x, n);
}

} // namespace qca::kernels
