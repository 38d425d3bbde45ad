#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace asepqj {

// Dense row-major real matrix. Multiplications route through the kernels
// layer (scalar/AVX2 runtime dispatch).
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    std::size_t size() const { return a_.size(); }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

Matrix multiply(const Matrix& A, const Matrix& B);      // A * B
Matrix multiply_nt(const Matrix& A, const Matrix& B);   // A * B^T
Matrix transpose(const Matrix& A);
Matrix kron(const Matrix& A, const Matrix& B);
Matrix operator+(Matrix A, const Matrix& B);
Matrix operator-(Matrix A, const Matrix& B);
Matrix operator*(double s, Matrix A);

std::vector<double> apply(const Matrix& A, const std::vector<double>& x);

double max_abs(const Matrix& A);
double max_abs(const std::vector<double>& x);
double max_abs_diff(const Matrix& A, const Matrix& B);
double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y);
double commutator_max_abs(const Matrix& A, const Matrix& B);  // ||AB - BA||_max

// exp(A) by scaling-and-squaring on a norm-controlled Taylor series.
Matrix expm(const Matrix& A);

inline void check_square(const Matrix& A) {
    if (!A.square()) throw std::invalid_argument("matrix must be square");
}

}  // namespace asepqj
