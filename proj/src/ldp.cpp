#include "asepqj/ldp.hpp"

#include <cmath>
#include <stdexcept>

#include "asepqj/qcalc.hpp"
#include "asepqj/walker.hpp"

namespace asepqj {

double cumulant(double z, const QParams& params) {
    const double b2 = q_number_int(params.two_j, params.q);
    const double qtj = std::pow(params.q, params.two_j);
    return b2 * ((std::exp(z) - 1.0) / qtj + (std::exp(-z) - 1.0) * qtj);
}

double ldp_rate(double x, const QParams& params) {
    const double b2 = q_number_int(params.two_j, params.q);
    const double b4 = q_number_int(2 * params.two_j, params.q);
    const double u = x / (2.0 * b2);
    return b4 - std::sqrt(x * x + 4.0 * b2 * b2) +
           x * (params.two_j * std::log(params.q) + std::asinh(u));
}

double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    if (b < a) throw std::invalid_argument("golden_section_min: empty bracket");
    constexpr double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double ldp_rate_numeric(double x, const QParams& params) {
    const double zstar = golden_section_min(
        [&](double z) { return cumulant(z, params) - z * x; }, -60.0, 60.0, 1e-11);
    return x * zstar - cumulant(zstar, params);
}

double growth_rate_base(const std::vector<double>& mu, const QParams& params) {
    const double q = params.q;
    const double lam_q = lambda_moment(q * q, mu);
    const double lam_iq = lambda_moment(1.0 / (q * q), mu);
    return std::max(lam_q, std::pow(q, 2.0 * params.two_j) * lam_iq);
}

double growth_rate(const std::vector<double>& mu, const QParams& params) {
    const double logm = std::log(growth_rate_base(mu, params));
    const WalkerLaw law(params);
    const double xmax =
        law.drift() + 20.0 * std::max(1.0, std::sqrt(law.total_rate()));
    const auto neg_obj = [&](double x) { return ldp_rate(x, params) - x * logm; };
    const double xs = golden_section_min(neg_obj, 0.0, xmax, 1e-8);
    if (xs > xmax - 1e-6)
        throw std::runtime_error("growth_rate: optimizer ran into the bracket edge");
    const double sup = -neg_obj(xs);
    const double xi = golden_section_min([&](double x) { return ldp_rate(x, params); },
                                         0.0, xmax, 1e-8);
    return sup - ldp_rate(xi, params);
}

}  // namespace asepqj
