#pragma once

#include <cstdint>
#include <vector>

#include "asepqj/qparams.hpp"

namespace asepqj {

// Law of the single dual particle: an asymmetric continuous-time walk with
// left rate q^{2j} [2j]_q and right rate q^{-2j} [2j]_q.
struct WalkerLaw {
    QParams params;
    double left_rate = 0.0;
    double right_rate = 0.0;

    explicit WalkerLaw(const QParams& p);
    double drift() const { return right_rate - left_rate; }
    double total_rate() const { return right_rate + left_rate; }  // = [4j]_q
};

// P(x(t) = x | x(0) = i) = e^{-[4j]_q t} q^{-2j(x-i)} I_{x-i}(2 [2j]_q t)
double walker_kernel(std::int64_t i, std::int64_t x, double t, const QParams& params);

// kernel on x in [xlo, xhi] as a dense row (one Bessel pass)
std::vector<double> walker_kernel_row(std::int64_t i, double t, const QParams& params,
                                      std::int64_t xlo, std::int64_t xhi);

// conservative summation range: mode +- 12 sigma plus a flat margin
void walker_sum_range(std::int64_t i, double t, const QParams& params,
                      std::int64_t& xlo, std::int64_t& xhi);

// E_{eta+-}[q^{2 J_i(t)}] for the step initial conditions, via kernel sums in
// the cancellation-free arrangement; and their t -> infinity limits.
double moment_step(int sign, std::int64_t i, double t, const QParams& params);
double moment_step_limit(int sign, std::int64_t i, const QParams& params);

// lambda_y = sum_n y^n mu(n)
double lambda_moment(double y, const std::vector<double>& mu);

// E^{(x)mu}[q^{2 J_i(t)}] for a homogeneous product initial measure; the
// formula is i-independent. mu must be normalized over {0,...,2j}.
double moment_product(const std::vector<double>& mu, double t, const QParams& params);

// E_eta[q^{2 J_i(t)}] for a concrete configuration via the dual-walker
// recursion; eta vanishing outside its window. With infinite_left set, the
// boundary term q^{2 sum_{k<i} eta_k} is dropped (infinitely many particles
// to the left of i).
double q_moment_from_duality(const Configuration& eta, std::int64_t i, double t,
                             const QParams& params, bool infinite_left = false);

}  // namespace asepqj
