#include "asepqj/kernels.hpp"

#include <cmath>
#include <cstring>

// Reference lane. Plain loops, no intrinsics; the AVX2 lane is tested against
// these bit-for-bit up to FMA reassociation tolerance.

namespace asepqj::kernels::detail {

void matmul_scalar(const double* A, const double* B, double* C,
                   std::size_t n, std::size_t k, std::size_t m) {
    std::memset(C, 0, n * m * sizeof(double));
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            const double a = arow[p];
            if (a == 0.0) continue;
            const double* brow = B + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += a * brow[j];
        }
    }
}

void matmul_nt_scalar(const double* A, const double* B, double* C,
                      std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * k;
        double* crow = C + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double* brow = B + j * k;
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += arow[p] * brow[p];
            crow[j] = s;
        }
    }
}

void add_scaled_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i]));
    return m;
}

double max_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(x[i] - y[i]));
    return m;
}

}  // namespace asepqj::kernels::detail
