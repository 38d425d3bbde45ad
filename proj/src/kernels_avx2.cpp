#include "asepqj/kernels.hpp"

// AVX2+FMA lane. Compiled with -mavx2 -mfma (see src/CMakeLists.txt); only
// invoked after a cpuid check, so it is safe to build unconditionally on x86.

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#include <cstring>

namespace asepqj::kernels::detail {

void matmul_avx2(const double* A, const double* B, double* C,
                 std::size_t n, std::size_t k, std::size_t m) {
    std::memset(C, 0, n * m * sizeof(double));
    const std::size_t mv = m & ~std::size_t(3);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * m;
        std::size_t p = 0;
        // rank-4 updates of the C row amortize the load/store traffic
        for (; p + 4 <= k; p += 4) {
            const __m256d a0 = _mm256_set1_pd(arow[p + 0]);
            const __m256d a1 = _mm256_set1_pd(arow[p + 1]);
            const __m256d a2 = _mm256_set1_pd(arow[p + 2]);
            const __m256d a3 = _mm256_set1_pd(arow[p + 3]);
            const double* b0 = B + (p + 0) * m;
            const double* b1 = B + (p + 1) * m;
            const double* b2 = B + (p + 2) * m;
            const double* b3 = B + (p + 3) * m;
            std::size_t j = 0;
            for (; j < mv; j += 4) {
                __m256d c = _mm256_loadu_pd(crow + j);
                c = _mm256_fmadd_pd(a0, _mm256_loadu_pd(b0 + j), c);
                c = _mm256_fmadd_pd(a1, _mm256_loadu_pd(b1 + j), c);
                c = _mm256_fmadd_pd(a2, _mm256_loadu_pd(b2 + j), c);
                c = _mm256_fmadd_pd(a3, _mm256_loadu_pd(b3 + j), c);
                _mm256_storeu_pd(crow + j, c);
            }
            for (; j < m; ++j)
                crow[j] += arow[p] * b0[j] + arow[p + 1] * b1[j] +
                           arow[p + 2] * b2[j] + arow[p + 3] * b3[j];
        }
        for (; p < k; ++p) {
            const __m256d a = _mm256_set1_pd(arow[p]);
            const double* brow = B + p * m;
            std::size_t j = 0;
            for (; j < mv; j += 4) {
                __m256d c = _mm256_loadu_pd(crow + j);
                c = _mm256_fmadd_pd(a, _mm256_loadu_pd(brow + j), c);
                _mm256_storeu_pd(crow + j, c);
            }
            for (; j < m; ++j) crow[j] += arow[p] * brow[j];
        }
    }
}

static inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void matmul_nt_avx2(const double* A, const double* B, double* C,
                    std::size_t n, std::size_t k, std::size_t m) {
    const std::size_t kv = k & ~std::size_t(3);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double* brow = B + j * k;
            __m256d acc = _mm256_setzero_pd();
            std::size_t p = 0;
            for (; p < kv; p += 4)
                acc = _mm256_fmadd_pd(_mm256_loadu_pd(arow + p),
                                      _mm256_loadu_pd(brow + p), acc);
            double s = hsum(acc);
            for (; p < k; ++p) s += arow[p] * brow[p];
            crow[j] = s;
        }
    }
}

void add_scaled_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d yv = _mm256_loadu_pd(y + i);
        yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

static const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double max_abs_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(x + i), kAbsMask));
    double m = 0.0;
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, acc);
    for (double v : tmp) m = m < v ? v : m;
    for (; i < n; ++i) {
        const double v = x[i] < 0 ? -x[i] : x[i];
        if (v > m) m = v;
    }
    return m;
}

double max_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_max_pd(acc, _mm256_and_pd(d, kAbsMask));
    }
    double m = 0.0;
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, acc);
    for (double v : tmp) m = m < v ? v : m;
    for (; i < n; ++i) {
        double v = x[i] - y[i];
        if (v < 0) v = -v;
        if (v > m) m = v;
    }
    return m;
}

}  // namespace asepqj::kernels::detail
#endif  // x86_64
