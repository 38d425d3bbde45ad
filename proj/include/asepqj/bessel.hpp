#pragma once

#include <vector>

namespace asepqj {

// Scaled modified Bessel function e^{-w} I_n(w), n >= 0, w >= 0.
// Series summation for w <= 30, downward Miller recurrence (normalized by
// e^w = I_0 + 2 sum I_k) above that. Values below ~1e-300 flush to zero.
double bessel_i_scaled(int n, double w);

// e^{-w} I_n(w) for n = 0..nmax in one Miller pass.
std::vector<double> bessel_i_scaled_array(int nmax, double w);

// log(e^{-w} I_n(w)); -inf where the value is exactly zero. Covers the tails
// that underflow the scaled representation.
double bessel_i_scaled_log(int n, double w);

}  // namespace asepqj
