#include "asepqj/linalg.hpp"

#include <cmath>

#include "asepqj/kernels.hpp"

namespace asepqj {

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

Matrix multiply(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("shape mismatch in multiply");
    Matrix C(A.rows(), B.cols());
    kernels::matmul(A.data(), B.data(), C.data(), A.rows(), A.cols(), B.cols());
    return C;
}

Matrix multiply_nt(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.cols()) throw std::invalid_argument("shape mismatch in multiply_nt");
    Matrix C(A.rows(), B.rows());
    kernels::matmul_nt(A.data(), B.data(), C.data(), A.rows(), A.cols(), B.rows());
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.cols(), A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) T(c, r) = A(r, c);
    return T;
}

Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
    for (std::size_t ar = 0; ar < A.rows(); ++ar)
        for (std::size_t ac = 0; ac < A.cols(); ++ac) {
            const double a = A(ar, ac);
            if (a == 0.0) continue;
            for (std::size_t br = 0; br < B.rows(); ++br) {
                double* dst = K.data() + (ar * B.rows() + br) * K.cols() + ac * B.cols();
                kernels::add_scaled(a, B.data() + br * B.cols(), dst, B.cols());
            }
        }
    return K;
}

Matrix operator+(Matrix A, const Matrix& B) { return A += B; }
Matrix operator-(Matrix A, const Matrix& B) { return A -= B; }
Matrix operator*(double s, Matrix A) { return A *= s; }

std::vector<double> apply(const Matrix& A, const std::vector<double>& x) {
    if (A.cols() != x.size()) throw std::invalid_argument("shape mismatch in apply");
    std::vector<double> y(A.rows(), 0.0);
    kernels::matmul(A.data(), x.data(), y.data(), A.rows(), A.cols(), 1);
    return y;
}

double max_abs(const Matrix& A) { return kernels::max_abs(A.data(), A.size()); }
double max_abs(const std::vector<double>& x) { return kernels::max_abs(x.data(), x.size()); }

double max_abs_diff(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("shape mismatch");
    return kernels::max_abs_diff(A.data(), B.data(), A.size());
}

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    return kernels::max_abs_diff(x.data(), y.data(), x.size());
}

double commutator_max_abs(const Matrix& A, const Matrix& B) {
    return max_abs_diff(multiply(A, B), multiply(B, A));
}

Matrix expm(const Matrix& A) {
    check_square(A);
    const std::size_t n = A.rows();
    const double norm = max_abs(A) * static_cast<double>(n);
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5 && squarings < 60) {
        scale *= 0.5;
        ++squarings;
    }
    Matrix As = scale * A;
    Matrix result = Matrix::identity(n);
    Matrix term = Matrix::identity(n);
    for (int m = 1; m <= 40; ++m) {
        term = multiply(term, As);
        term *= 1.0 / m;
        result += term;
        if (max_abs(term) < 1e-18 * max_abs(result)) break;
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

}  // namespace asepqj
