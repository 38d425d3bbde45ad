#include "asepqj/walker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "asepqj/bessel.hpp"
#include "asepqj/qcalc.hpp"

namespace asepqj {

WalkerLaw::WalkerLaw(const QParams& p) : params(p) {
    const double b2 = q_number_int(p.two_j, p.q);
    left_rate = std::pow(p.q, p.two_j) * b2;
    right_rate = std::pow(p.q, -p.two_j) * b2;
}

namespace {

struct KernelScale {
    double w;        // 2 [2j]_q t
    double pre;      // (2[2j]_q - [4j]_q) t, <= 0
    double ln_q;
    double two_j;
};

KernelScale kernel_scale(double t, const QParams& params) {
    const double b2 = q_number_int(params.two_j, params.q);
    const double b4 = q_number_int(2 * params.two_j, params.q);
    return {2.0 * b2 * t, (2.0 * b2 - b4) * t, std::log(params.q),
            static_cast<double>(params.two_j)};
}

double kernel_from_log(const KernelScale& ks, std::int64_t n, double ln_bessel) {
    // P = q^{-2j n} e^{pre} (e^{-w} I_n(w)),  n = x - i
    const double lp = -ks.two_j * static_cast<double>(n) * ks.ln_q + ks.pre + ln_bessel;
    return lp < -745.0 ? 0.0 : std::exp(lp);
}

}  // namespace

double walker_kernel(std::int64_t i, std::int64_t x, double t, const QParams& params) {
    if (t < 0.0) throw std::domain_error("walker_kernel: t must be >= 0");
    if (t == 0.0) return x == i ? 1.0 : 0.0;
    const KernelScale ks = kernel_scale(t, params);
    const std::int64_t n = x - i;
    return kernel_from_log(ks, n, bessel_i_scaled_log(static_cast<int>(std::llabs(n)), ks.w));
}

std::vector<double> walker_kernel_row(std::int64_t i, double t, const QParams& params,
                                      std::int64_t xlo, std::int64_t xhi) {
    if (xhi < xlo) throw std::domain_error("walker_kernel_row: empty range");
    std::vector<double> row(static_cast<std::size_t>(xhi - xlo + 1), 0.0);
    if (t == 0.0) {
        if (i >= xlo && i <= xhi) row[static_cast<std::size_t>(i - xlo)] = 1.0;
        return row;
    }
    const KernelScale ks = kernel_scale(t, params);
    const int nmax = static_cast<int>(std::max(std::llabs(xlo - i), std::llabs(xhi - i)));
    const std::vector<double> sc = bessel_i_scaled_array(nmax, ks.w);
    for (std::int64_t x = xlo; x <= xhi; ++x) {
        const std::int64_t n = x - i;
        const int na = static_cast<int>(std::llabs(n));
        const double lb =
            sc[na] > 0.0 ? std::log(sc[na]) : bessel_i_scaled_log(na, ks.w);
        row[static_cast<std::size_t>(x - xlo)] = kernel_from_log(ks, n, lb);
    }
    return row;
}

void walker_sum_range(std::int64_t i, double t, const QParams& params,
                      std::int64_t& xlo, std::int64_t& xhi) {
    const WalkerLaw law(params);
    const double mode = static_cast<double>(i) + law.drift() * t;
    const double spread = 12.0 * std::sqrt(law.total_rate() * t) + 80.0;
    xlo = static_cast<std::int64_t>(std::floor(mode - spread));
    xhi = static_cast<std::int64_t>(std::ceil(mode + spread));
}

namespace {

// sum of f over successive x in one direction; f must be unimodal in x
template <typename F>
double directed_sum(std::int64_t x0, std::int64_t step, F&& f) {
    double acc = 0.0, prev = -1.0;
    std::int64_t x = x0;
    for (std::int64_t it = 0; it < 4000000; ++it, x += step) {
        const double v = f(x);
        acc += v;
        const bool tiny = v <= 1e-17 * acc;
        if (tiny && v < prev) return acc;
        prev = v;
    }
    throw std::runtime_error("walker sum did not truncate");
}

}  // namespace

double moment_step(int sign, std::int64_t i, double t, const QParams& params) {
    if (t < 0.0) throw std::domain_error("moment_step: t must be >= 0");
    if (sign != 1 && sign != -1) throw std::domain_error("moment_step: sign must be +-1");
    if (t == 0.0) return 1.0;
    const double q = params.q;
    const double fourj = 2.0 * params.two_j;
    const KernelScale ks = kernel_scale(t, params);
    const auto lnbessel = [&](std::int64_t x) {
        return bessel_i_scaled_log(static_cast<int>(std::llabs(x - i)), ks.w);
    };
    const auto kernel = [&](std::int64_t x) { return kernel_from_log(ks, x - i, lnbessel(x)); };

    // E_i[q^{4j x} 1_{x>=1}] and the two half masses, all cancellation-free
    const double e_q4jx_ge1 =
        directed_sum(1, +1, [&](std::int64_t x) { return std::pow(q, fourj * x) * kernel(x); });
    const WalkerLaw law(params);
    const double mode = static_cast<double>(i) + law.drift() * t;
    double p_le0, p_ge1;
    if (mode <= 0.5) {
        p_ge1 = directed_sum(1, +1, kernel);
        p_le0 = 1.0 - p_ge1;
    } else {
        p_le0 = directed_sum(0, -1, kernel);
        p_ge1 = 1.0 - p_le0;
    }

    const double maxi = static_cast<double>(std::max<std::int64_t>(0, i));
    if (sign > 0)
        return std::pow(q, fourj * maxi) *
               (1.0 + std::pow(q, -fourj * static_cast<double>(i)) * (p_ge1 - e_q4jx_ge1));
    return std::pow(q, -fourj * maxi) * (p_le0 + e_q4jx_ge1);
}

double moment_step_limit(int sign, std::int64_t i, const QParams& params) {
    if (sign != 1 && sign != -1) throw std::domain_error("moment_step_limit: sign must be +-1");
    if (sign < 0) return 0.0;
    const double q = params.q;
    const double fourj = 2.0 * params.two_j;
    const double maxi = static_cast<double>(std::max<std::int64_t>(0, i));
    return std::pow(q, fourj * maxi) * (1.0 + std::pow(q, -fourj * static_cast<double>(i)));
}

double lambda_moment(double y, const std::vector<double>& mu) {
    double s = 0.0, yn = 1.0;
    for (double p : mu) {
        s += yn * p;
        yn *= y;
    }
    return s;
}

namespace {

void check_measure(const std::vector<double>& mu, const QParams& params) {
    if (static_cast<int>(mu.size()) != params.local_dim())
        throw std::domain_error("measure must have 2j+1 entries");
    double s = 0.0;
    for (double p : mu) {
        if (p < 0.0) throw std::domain_error("measure entries must be >= 0");
        s += p;
    }
    if (std::fabs(s - 1.0) > 1e-12) throw std::domain_error("measure is not normalized");
}

}  // namespace

double moment_product(const std::vector<double>& mu, double t, const QParams& params) {
    check_measure(mu, params);
    if (t < 0.0) throw std::domain_error("moment_product: t must be >= 0");
    if (t == 0.0) return 1.0;
    const double q = params.q;
    const double fourj = 2.0 * params.two_j;
    const double lam_q = lambda_moment(q * q, mu);
    const double lam_iq = lambda_moment(1.0 / (q * q), mu);
    const KernelScale ks = kernel_scale(t, params);
    const auto lnkernel = [&](std::int64_t x) {
        return -ks.two_j * static_cast<double>(x) * ks.ln_q + ks.pre +
               bessel_i_scaled_log(static_cast<int>(std::llabs(x)), ks.w);
    };
    // three-way split around the walker origin keeps every term positive
    const double ln_left = fourj * std::log(q) - std::log(lam_q);    // (q^{4j}/lam_q)^x
    const double ln_right = fourj * std::log(q) + std::log(lam_iq);  // (q^{4j} lam_{1/q})^x
    const double left = directed_sum(-1, -1, [&](std::int64_t x) {
        const double lv = static_cast<double>(x) * ln_left + lnkernel(x);
        return lv < -745.0 ? 0.0 : std::exp(lv);
    });
    const double right = directed_sum(1, +1, [&](std::int64_t x) {
        const double lv = static_cast<double>(x) * ln_right + lnkernel(x);
        return lv < -745.0 ? 0.0 : std::exp(lv);
    });
    const double center = std::exp(ks.pre + bessel_i_scaled_log(0, ks.w));
    return left + center + right;
}

double q_moment_from_duality(const Configuration& eta, std::int64_t i, double t,
                             const QParams& params, bool infinite_left) {
    if (t < 0.0) throw std::domain_error("q_moment_from_duality: t must be >= 0");
    const double q = params.q;
    const double fourj = 2.0 * params.two_j;
    const Window& w = eta.window;
    const std::int64_t L = w.size();

    // tail counts N_x = sum_{k>=x} eta_k inside the window
    std::vector<double> tail(static_cast<std::size_t>(L) + 1, 0.0);
    for (std::int64_t p = L - 1; p >= 0; --p)
        tail[p] = tail[p + 1] + eta.occ[static_cast<std::size_t>(p)];
    const auto n_of = [&](std::int64_t x) {
        if (x <= w.first) return tail[0];
        if (x > w.last) return 0.0;
        return tail[static_cast<std::size_t>(x - w.first)];
    };
    const double n_i = n_of(i);
    const double total = tail[0];

    double first = infinite_left ? 0.0 : std::pow(q, 2.0 * (total - n_i));
    if (t == 0.0) return 1.0;

    // integrand of the dual-walker expectation; supported on occupied sites
    std::vector<double> f(static_cast<std::size_t>(L), 0.0);
    double fmax = 0.0;
    for (std::int64_t p = 0; p < L; ++p) {
        const int occ = eta.occ[static_cast<std::size_t>(p)];
        if (occ == 0) continue;
        const std::int64_t x = w.first + p;
        const double v = std::pow(q, fourj * static_cast<double>(x)) *
                         (1.0 - std::pow(q, -2.0 * occ)) *
                         std::pow(q, 2.0 * (n_of(x) - n_i));
        f[static_cast<std::size_t>(p)] = v;
        fmax = std::max(fmax, std::fabs(v));
    }
    if (fmax == 0.0) return 1.0;  // empty configuration carries no current

    double acc = first;
    double acc_abs = std::fabs(first) + 1e-300;
    for (std::int64_t k = i - 1;; --k) {
        const double weight = std::pow(q, -fourj * static_cast<double>(k));
        if (weight * fmax < 1e-14 * acc_abs && k < w.first) break;
        const std::vector<double> row = walker_kernel_row(k, t, params, w.first, w.last);
        double e = 0.0;
        for (std::int64_t p = 0; p < L; ++p)
            e += row[static_cast<std::size_t>(p)] * f[static_cast<std::size_t>(p)];
        const double term = weight * e;
        acc -= term;
        acc_abs += std::fabs(term);
        if (k < w.first - 4000)
            throw std::runtime_error("q_moment_from_duality: dual sum did not truncate");
    }
    return acc;
}

}  // namespace asepqj
