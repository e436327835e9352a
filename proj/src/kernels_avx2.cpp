// AVX2+FMA variants of the flat complex kernels. This translation unit is
// compiled with -mavx2 -mfma; callers must gate on cpuid (see dispatch).

#include "morita/kernels.hpp"

#include <immintrin.h>

namespace morita::kernels {

namespace {

// One __m256d holds two complex doubles as [re0, im0, re1, im1].

inline __m256d cmul(__m256d u, __m256d v) {
    const __m256d ur = _mm256_movedup_pd(u);         // [re0 re0 re1 re1]
    const __m256d ui = _mm256_permute_pd(u, 0xF);    // [im0 im0 im1 im1]
    const __m256d vs = _mm256_permute_pd(v, 0x5);    // [im0 re0 im1 re1]
    return _mm256_fmaddsub_pd(ur, v, _mm256_mul_pd(ui, vs));
}

inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
    const __m256d vs = _mm256_permute_pd(v, 0x5);
    return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vs));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(std::size_t n, cd a, const cd* x, cd* y) {
    if (a == cd{0.0, 0.0}) return;
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        __m256d vy = _mm256_loadu_pd(reinterpret_cast<double*>(const_cast<cd*>(y + i)));
        vy = _mm256_add_pd(vy, cmul_bcast(ar, ai, vx));
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

cd dotc_avx2(std::size_t n, const cd* x, const cd* y) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const __m256d conj_mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);  // negates imag lanes
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);  // xr*yr, xi*yi per lane
        const __m256d xc = _mm256_xor_pd(vx, conj_mask);        // [xr, -xi]
        const __m256d ys = _mm256_permute_pd(vy, 0x5);          // [yi, yr]
        acc_im = _mm256_fmadd_pd(xc, ys, acc_im);               // xr*yi, -xi*yr
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double nrm2sq_avx2(std::size_t n, const cd* x) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        acc = _mm256_fmadd_pd(vx, vx, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void scal_avx2(std::size_t n, cd a, cd* x) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        _mm256_storeu_pd(reinterpret_cast<double*>(x + i), cmul_bcast(ar, ai, vx));
    }
    for (; i < n; ++i) x[i] *= a;
}

void rot2_avx2(std::size_t n, cd* x, cd* y, cd a, cd b, cd c, cd d) {
    const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
    const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
    const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
    const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = _mm256_loadu_pd(reinterpret_cast<const double*>(x + i));
        const __m256d vy = _mm256_loadu_pd(reinterpret_cast<const double*>(y + i));
        const __m256d nx = _mm256_add_pd(cmul_bcast(ar, ai, vx), cmul_bcast(br, bi, vy));
        const __m256d ny = _mm256_add_pd(cmul_bcast(cr, ci, vx), cmul_bcast(dr, di, vy));
        _mm256_storeu_pd(reinterpret_cast<double*>(x + i), nx);
        _mm256_storeu_pd(reinterpret_cast<double*>(y + i), ny);
    }
    for (; i < n; ++i) {
        const cd xi = x[i];
        const cd yi = y[i];
        x[i] = a * xi + b * yi;
        y[i] = c * xi + d * yi;
    }
}

}  // namespace

const Ops* avx2_ops_raw() {
    static const Ops ops{axpy_avx2, dotc_avx2, nrm2sq_avx2, scal_avx2, rot2_avx2, "avx2"};
    return &ops;
}

}  // namespace morita::kernels
