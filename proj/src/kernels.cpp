#include "asepqj/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace asepqj::kernels {

namespace detail {
void matmul_scalar(const double*, const double*, double*, std::size_t, std::size_t, std::size_t);
void matmul_nt_scalar(const double*, const double*, double*, std::size_t, std::size_t, std::size_t);
void add_scaled_scalar(double, const double*, double*, std::size_t);
double max_abs_scalar(const double*, std::size_t);
double max_abs_diff_scalar(const double*, const double*, std::size_t);
#if defined(__x86_64__) || defined(_M_X64)
void matmul_avx2(const double*, const double*, double*, std::size_t, std::size_t, std::size_t);
void matmul_nt_avx2(const double*, const double*, double*, std::size_t, std::size_t, std::size_t);
void add_scaled_avx2(double, const double*, double*, std::size_t);
double max_abs_avx2(const double*, std::size_t);
double max_abs_diff_avx2(const double*, const double*, std::size_t);
#endif
}  // namespace detail

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Lane resolve_initial_lane() {
    const char* env = std::getenv("ASEPQJ_KERNELS");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return Lane::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Lane::avx2;
        if (std::strcmp(env, "avx2") == 0) return Lane::scalar;  // requested but unavailable
    }
    return cpu_has_avx2() ? Lane::avx2 : Lane::scalar;
}

Lane g_lane = resolve_initial_lane();

}  // namespace

Lane active_lane() { return g_lane; }

void set_lane(Lane lane) {
    if (lane == Lane::avx2 && !cpu_has_avx2()) lane = Lane::scalar;
    g_lane = lane;
}

const char* lane_name(Lane lane) { return lane == Lane::avx2 ? "avx2" : "scalar"; }

void matmul(const double* A, const double* B, double* C,
            std::size_t n, std::size_t k, std::size_t m) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_lane == Lane::avx2) return detail::matmul_avx2(A, B, C, n, k, m);
#endif
    detail::matmul_scalar(A, B, C, n, k, m);
}

void matmul_nt(const double* A, const double* B, double* C,
               std::size_t n, std::size_t k, std::size_t m) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_lane == Lane::avx2) return detail::matmul_nt_avx2(A, B, C, n, k, m);
#endif
    detail::matmul_nt_scalar(A, B, C, n, k, m);
}

void add_scaled(double a, const double* x, double* y, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_lane == Lane::avx2) return detail::add_scaled_avx2(a, x, y, n);
#endif
    detail::add_scaled_scalar(a, x, y, n);
}

double max_abs(const double* x, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_lane == Lane::avx2) return detail::max_abs_avx2(x, n);
#endif
    return detail::max_abs_scalar(x, n);
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (g_lane == Lane::avx2) return detail::max_abs_diff_avx2(x, y, n);
#endif
    return detail::max_abs_diff_scalar(x, y, n);
}

}  // namespace asepqj::kernels
