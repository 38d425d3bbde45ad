#pragma once

#include <cstddef>

// Data-parallel inner loops used by the dense-matrix layer.  Every kernel has
// a scalar reference implementation and an AVX2 variant; the lane is picked
// once at runtime (override with ASEPQJ_KERNELS=scalar|avx2|auto).
// Equivalence of the lanes is covered by tests/test_kernels.cpp.

namespace asepqj::kernels {

enum class Lane { scalar, avx2 };

Lane active_lane();
void set_lane(Lane lane);       // test hook; avx2 request is checked against cpuid
bool cpu_has_avx2();
const char* lane_name(Lane lane);

// C(n x m) = A(n x k) * B(k x m), row-major, C overwritten
void matmul(const double* A, const double* B, double* C,
            std::size_t n, std::size_t k, std::size_t m);

// C(n x m) = A(n x k) * B(m x k)^T, row-major, C overwritten
void matmul_nt(const double* A, const double* B, double* C,
               std::size_t n, std::size_t k, std::size_t m);

// y += a * x
void add_scaled(double a, const double* x, double* y, std::size_t n);

double max_abs(const double* x, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);

}  // namespace asepqj::kernels
