#pragma once

#include "asepqj/linalg.hpp"

namespace asepqj {

// q-deformed elementary functions.
//
//   [n]_q = (q^n - q^-n)/(q - q^-1),   {n}_q = (1-q^n)/(1-q)
//
// All of them take the q -> 1 limit branch when |q-1| < 1e-12. Arguments may
// be half-integers where noted (the spin chain uses [j]_q with j in N/2).

double q_number(double n, double q);            // [n]_q, limit branch n at q=1
double q_number_int(int n, double q);           // domain-checked integer variant
double q_factorial(int n, double q);            // [n]_q!
double q_binomial(int n, int k, double q);      // [n]_q! / ([k]_q! [n-k]_q!)
double q_brace(double n, double r);             // {n}_r, limit branch n at r=1
double q_brace_factorial(int n, double r);      // {n}_r!

// sum_{n>=0} X^n / {n}_r!; terminates exactly on nilpotent X, otherwise stops
// when the term max-norm drops below 1e-15 x accumulated max-norm. Throws
// std::runtime_error if 1e4 terms do not reach that (series radius exceeded).
Matrix q_matrix_exponential(const Matrix& X, double r);

}  // namespace asepqj
