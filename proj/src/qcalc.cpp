#include "asepqj/qcalc.hpp"

#include <cmath>
#include <stdexcept>

namespace asepqj {

namespace {
constexpr double kOne = 1.0 - 1e-12;  // threshold of the q -> 1 limit branch
}

double q_number(double n, double q) {
    if (!(q > 0.0)) throw std::domain_error("q_number: q must be positive");
    if (q > kOne && q < 2.0 - kOne) return n;
    return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

double q_number_int(int n, double q) {
    if (n < 0) throw std::domain_error("q_number_int: n must be nonnegative");
    if (!(q > 0.0) || q > 1.0) throw std::domain_error("q_number_int: q must be in (0,1]");
    return q_number(static_cast<double>(n), q);
}

double q_factorial(int n, double q) {
    if (n < 0) throw std::domain_error("q_factorial: n must be nonnegative");
    double out = 1.0;
    for (int m = 1; m <= n; ++m) out *= q_number(static_cast<double>(m), q);
    return out;
}

double q_binomial(int n, int k, double q) {
    if (k < 0 || k > n) throw std::domain_error("q_binomial: need 0 <= k <= n");
    // running product of [n-m+1]_q/[m]_q keeps intermediates balanced
    double out = 1.0;
    if (k > n - k) k = n - k;
    for (int m = 1; m <= k; ++m)
        out *= q_number(static_cast<double>(n - m + 1), q) / q_number(static_cast<double>(m), q);
    return out;
}

double q_brace(double n, double r) {
    if (!(r > 0.0)) throw std::domain_error("q_brace: base must be positive");
    if (r > kOne && r < 2.0 - kOne) return n;
    return (1.0 - std::pow(r, n)) / (1.0 - r);
}

double q_brace_factorial(int n, double r) {
    if (n < 0) throw std::domain_error("q_brace_factorial: n must be nonnegative");
    double out = 1.0;
    for (int m = 1; m <= n; ++m) out *= q_brace(static_cast<double>(m), r);
    return out;
}

Matrix q_matrix_exponential(const Matrix& X, double r) {
    check_square(X);
    if (!(r > 0.0)) throw std::domain_error("q_matrix_exponential: base must be positive");
    const std::size_t n = X.rows();
    Matrix sum = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    double prev = 0.0;
    int rising = 0;
    for (int m = 1; m <= 10000; ++m) {
        term = multiply(term, X);
        const double brace = q_brace(static_cast<double>(m), r);
        term *= 1.0 / brace;
        const double tn = max_abs(term);
        if (tn == 0.0) return sum;  // nilpotent input: series terminated exactly
        if (!std::isfinite(tn))
            throw std::runtime_error("q_matrix_exponential: series diverged");
        sum += term;
        if (tn < 1e-15 * max_abs(sum)) return sum;
        rising = tn > prev ? rising + 1 : 0;
        prev = tn;
        if (rising > 600)
            throw std::runtime_error("q_matrix_exponential: series not converging");
    }
    throw std::runtime_error("q_matrix_exponential: no convergence within 1e4 terms");
}

}  // namespace asepqj
