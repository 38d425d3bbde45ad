#pragma once

#include <functional>
#include <vector>

#include "asepqj/qparams.hpp"

namespace asepqj {

// Scaled cumulant generating function of the dual walker,
//   Lambda(z) = [2j]_q ((e^z - 1) q^{-2j} + (e^{-z} - 1) q^{2j}).
double cumulant(double z, const QParams& params);

// Its Legendre transform (the large-deviation rate function of x(t)/t),
//   I(x) = [4j]_q - sqrt(x^2 + (2[2j]_q)^2) + x (2j ln q + asinh(x / (2[2j]_q))).
// I(drift) = 0 at drift = [2j]_q (q^{-2j} - q^{2j}).
double ldp_rate(double x, const QParams& params);

// sup_z { z x - Lambda(z) } by golden-section search; the independent route
// against the closed form above.
double ldp_rate_numeric(double x, const QParams& params);

// Golden-section minimizer of a unimodal function on [a, b] to tolerance tol
// in the argument; returns the arg min.
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-8);

// Exponential growth rate of the first q-moment under a product initial
// measure:  sup_{x>=0} { x log M_q - I(x) } - inf_{x>=0} I(x)
// with M_q = max(lambda_{q^2}, q^{4j} lambda_{q^-2}).
double growth_rate(const std::vector<double>& mu, const QParams& params);
double growth_rate_base(const std::vector<double>& mu, const QParams& params);  // M_q

}  // namespace asepqj
