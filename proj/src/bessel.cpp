#include "asepqj/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace asepqj {

namespace {

constexpr double kSeriesCut = 30.0;

// log of e^{-w} I_n(w) via the all-positive series; valid for any n, and for
// w up to ~700 where the partial sums still fit in a double
double series_scaled_log(int n, double w) {
    if (w == 0.0)
        return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    const double half = 0.5 * w;
    const double log_t0 = n * std::log(half) - std::lgamma(n + 1.0);
    double term = 1.0, sum = 1.0;
    const double x2 = half * half;
    for (int k = 1; k < 8000; ++k) {
        term *= x2 / (static_cast<double>(k) * (n + k));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return log_t0 + std::log(sum) - w;
}

double from_log(double lv) { return lv < -745.0 ? 0.0 : std::exp(lv); }

int miller_start(int nmax, double w) {
    const double guard = std::sqrt(40.0 * w + 100.0) + 0.02 * w;
    return nmax + static_cast<int>(guard) + 30;
}

}  // namespace

std::vector<double> bessel_i_scaled_array(int nmax, double w) {
    if (nmax < 0 || w < 0.0) throw std::domain_error("bessel_i_scaled_array: bad arguments");
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
    if (w == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (w <= kSeriesCut) {
        for (int n = 0; n <= nmax; ++n) out[n] = from_log(series_scaled_log(n, w));
        return out;
    }
    // downward Miller recurrence I_k = I_{k+2} + 2(k+1)/w I_{k+1}, normalized
    // by e^w = I_0 + 2 sum_{k>=1} I_k
    const int m0 = miller_start(nmax, w);
    double ip1 = 0.0, ic = 1e-280;
    double norm = 0.0;
    for (int k = m0; k >= 0; --k) {
        const double im1 = ip1 + (2.0 * (k + 1) / w) * ic;
        ip1 = ic;
        ic = im1;
        if (k <= nmax) out[k] = ic;
        norm += (k == 0 ? 1.0 : 2.0) * ic;
        if (ic > 1e250) {
            const double s = 1e-250;
            ip1 *= s;
            ic *= s;
            norm *= s;
            for (double& v : out) v *= s;
        }
    }
    for (double& v : out) v /= norm;
    return out;
}

double bessel_i_scaled_log(int n, double w) {
    if (n < 0) n = -n;  // I_{-n} = I_n
    if (w < 0.0) throw std::domain_error("bessel_i_scaled_log: w must be >= 0");
    if (w <= 700.0) return series_scaled_log(n, w);  // partial sums stay finite
    const double v = bessel_i_scaled_array(n, w)[static_cast<std::size_t>(n)];
    return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

double bessel_i_scaled(int n, double w) {
    if (n < 0) n = -n;
    if (w < 0.0) throw std::domain_error("bessel_i_scaled: w must be >= 0");
    if (w == 0.0) return n == 0 ? 1.0 : 0.0;
    if (w <= kSeriesCut) return from_log(series_scaled_log(n, w));
    if (n > w + 6.0 * std::sqrt(w) + 40.0) return from_log(series_scaled_log(n, w));
    return bessel_i_scaled_array(n, w)[static_cast<std::size_t>(n)];
}

}  // namespace asepqj
