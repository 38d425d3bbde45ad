#pragma once

#include "asepqj/algebra.hpp"
#include "asepqj/generator.hpp"
#include "asepqj/linalg.hpp"
#include "asepqj/qparams.hpp"

namespace asepqj {

// Self-duality functions of the process. D and Dprime are the triangular
// product forms; DiagonalAlpha is the trivial diagonal family built from the
// reversible measures.
struct DualityKind {
    enum Tag { D, Dprime, DiagonalAlpha } tag = D;
    double alpha = 1.0;

    static DualityKind d() { return {D, 0.0}; }
    static DualityKind dprime() { return {Dprime, 0.0}; }
    static DualityKind diagonal(double a) { return {DiagonalAlpha, a}; }
};
const char* to_string(DualityKind::Tag tag);

// Pointwise value; eta and xi live on the same window of absolute sites
// (closed chains use [1,L]). Zero whenever some xi_i > eta_i;
// DiagonalAlpha is zero off the diagonal.
double duality_value(DualityKind kind, const Configuration& eta, const Configuration& xi,
                     const QParams& params);

// Full matrix on sites 1..L.
Matrix duality_matrix(DualityKind kind, const QParams& params, int L);

// ||M D - D M^T||_max with M the closed-boundary generator.
double duality_residual(DualityKind kind, const QParams& params, int L,
                        std::size_t dim_cap = 4096);
double duality_residual_for(const Matrix& M, const Matrix& D);

// G^-1 S G^-1 for S in {S+, S~-}; a self-duality matrix by construction.
Matrix duality_from_symmetry(ExpSymKind kind, const QParams& params, int L);

// Sector proportionality contract between the symmetry-built duality matrices
// and the product forms: within each fixed (N(eta), N(xi)) sector,
//   G^-1 S+  G^-1          = const * D,
//   (G^-1 S~- G^-1)^T      = const * Dprime.
// Returns the max relative deviation from sector constancy (support mismatch
// counts as failure). Only Sp and Smt are admissible.
double sector_proportionality_residual(ExpSymKind kind, const QParams& params, int L);

// j = 1/2 only: Dprime against the occupied-site product form
//   prod_m q^{2 k_m} q^{-2 N_{k_m - 1}} eta_{k_m}
// (k_m the dual particle positions, N_i the left occupation count). Returns
// the max relative deviation from constancy within (N, M) sectors.
double schuetz_reduction_check(const QParams& params, int L);

}  // namespace asepqj
