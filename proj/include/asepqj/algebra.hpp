#pragma once

#include <string>

#include "asepqj/linalg.hpp"
#include "asepqj/qparams.hpp"

namespace asepqj {

// Single-site operators of the (2j+1)-dimensional representation:
//   Jp|n> = sqrt([2j-n]_q [n+1]_q) |n+1>,  Jm|n> = sqrt([n]_q [2j-n+1]_q) |n-1>,
//   J0 = diag(n - j),  K = q^{2 J0},
//   E = q^{J0} Jp,  F = Jm q^{-J0},  Et = Jp q^{-J0},  Ft = q^{J0} Jm.
struct LocalOps {
    QParams params;
    Matrix jp, jm, j0, k;
    Matrix e, f, et, ft;
    Matrix q_j0, q_mj0;  // diag(q^{n-j}), diag(q^{-(n-j)})
};

LocalOps local_operators(const QParams& params);

// Casimir C = Jm Jp + [J0]_q [J0+1]_q (diagonal, constant [j]_q [j+1]_q).
Matrix local_casimir(const QParams& params);

// Per-bond additive constant c = (q^{2j}-q^{-2j})(q^{2j+1}-q^{-(2j+1)})/(q-q^{-1})^2.
double bond_constant(const QParams& params);

// The two-site coproduct Casimir
//   Delta(C) = -q^{J0 (x) 1} { Jp(x)Jm + Jm(x)Jp + k1 [J0]q (x) [J0]q
//              + k2 (q^{J0}+q^{-J0}) (x) (q^{J0}+q^{-J0}) } 1 (x) q^{-J0}
// with k1 = (q^j+q^-j)(q^{j+1}+q^{-(j+1)})/2 and k2 = [j]_q [j+1]_q / 2.
// Satisfies (Delta(C) + c) |0,0> = 0.
Matrix two_site_casimir_coproduct(const QParams& params);

// Bond Hamiltonian -(Delta(C) + c). The overall sign is fixed so that the
// off-diagonal part is nonnegative and G^-1 H G is the jump-rate generator;
// annihilating the vacuum and self-adjointness hold for either sign.
Matrix two_site_hamiltonian(const QParams& params);

// H_(L) = sum of identity-padded bond Hamiltonians over bonds 1..L-1.
// Throws std::length_error when (2j+1)^L exceeds dim_cap.
Matrix hamiltonian(const QParams& params, int L, std::size_t dim_cap = 4096);

std::size_t chain_dim(const QParams& params, int L);
void check_dim_cap(const QParams& params, int L, std::size_t dim_cap);

enum class ChainOpKind { Jp, Jm, J0, E, F, Et, Ft };
enum class ExpSymKind { Sp, Sm, Spt, Smt };

const char* to_string(ChainOpKind k);
const char* to_string(ExpSymKind k);

// Coproduct-telescoped chain operators; all commute with H_(L).
Matrix chain_symmetry(ChainOpKind kind, const QParams& params, int L);

// q-exponential symmetries from their closed-form matrix elements:
//   Sp = exp_{q^2}(E^(L)), Sm = exp_{q^-2}(F^(L)),
//   Spt = exp_{q^2}(Et^(L)), Smt = exp_{q^-2}(Ft^(L)).
Matrix exponential_symmetry(ExpSymKind kind, const QParams& params, int L);

// Independent series route used to cross-check the closed forms.
Matrix exponential_symmetry_series(ExpSymKind kind, const QParams& params, int L);

// Max-norm residuals of the ordered-product factorizations
//   exp_{q^2}(E^(L)) = prod_i exp_{q^2}(K_1..K_{i-1} E_i)   and
//   exp_{q^-2}(F^(L)) = prod_i exp_{q^-2}(F_i K_{i+1}^-1..K_L^-1)  (left to right).
struct FactorizationResidual {
    double raising = 0.0;
    double lowering = 0.0;
    double max() const { return raising > lowering ? raising : lowering; }
};
FactorizationResidual verify_pseudo_factorization(const QParams& params, int L);

// Ground state g(eta) = prod_i sqrt(binom(2j,eta_i)_q) q^{eta_i (1+j-2ji)} and
// the diagonal transform G with those entries. ground_state_via_symmetry
// computes the same vector as Sp |0...0| (independent route).
std::vector<double> ground_state(const QParams& params, int L);
std::vector<double> ground_state_via_symmetry(const QParams& params, int L);
Matrix ground_transform(const QParams& params, int L);
Matrix conjugate_by_ground_transform(const Matrix& H, const QParams& params, int L);  // G^-1 H G

}  // namespace asepqj
