#pragma once

#include "asepqj/linalg.hpp"
#include "asepqj/qparams.hpp"

namespace asepqj {

enum class BoundaryKind { Closed, Periodic, TruncatedLine };
const char* to_string(BoundaryKind b);

enum class JumpDir { Right, Left };

// Jump rates of the exclusion process across bond (i, i+1):
//   right: q^{eta_i - eta_{i+1} - (2j+1)} [eta_i]_q [2j - eta_{i+1}]_q
//   left:  q^{eta_i - eta_{i+1} + (2j+1)} [2j - eta_i]_q [eta_{i+1}]_q
double jump_rate_pair(int eta_i, int eta_ip1, JumpDir dir, const QParams& params);
double jump_rate(const Configuration& cfg, std::int64_t i, JumpDir dir,
                 const QParams& params, BoundaryKind boundary = BoundaryKind::Closed);

// Generator matrix on sites 1..L: entry (x,y) is the rate x -> y, diagonal is
// minus the row sum. Periodic adds the wrap bond (L,1) and requires L >= 3.
Matrix generator_matrix(const QParams& params, int L,
                        BoundaryKind boundary = BoundaryKind::Closed,
                        std::size_t dim_cap = 4096);

// Reversible product-measure marginal at site i (1-based):
//   P^(alpha)(eta_i = n) proportional to alpha^n binom(2j,n)_q q^{2n(1+j-2ji)}
std::vector<double> reversible_marginal(const QParams& params, double alpha, std::int64_t i);

// max_{eta, bonds} |mu(eta) c(eta,eta') - mu(eta') c(eta',eta)| with mu the
// product of reversible marginals; Periodic included for the failure check.
// scale is the largest probability flux encountered.
struct DetailedBalanceResult {
    double residual = 0.0;
    double scale = 0.0;
};
DetailedBalanceResult detailed_balance_check(const QParams& params, double alpha, int L,
                                             BoundaryKind boundary = BoundaryKind::Closed);
double detailed_balance_residual(const QParams& params, double alpha, int L,
                                 BoundaryKind boundary = BoundaryKind::Closed);

// The j=1 no-translation-invariant-product-measure certificate:
//   alpha = q^3 + q - q^-1 - q^-3,
//   gamma = (q^3 + 3q + 3q^-1 + q^-3)/(q^3 + q^-3)   (forced coefficient),
//   delta = gamma q^3 - q - 2 q^-1 - q^-3,
// gap = delta - 2 alpha != 0 rules the measure out.
struct ObstructionRecord {
    double alpha = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double gap = 0.0;
};
ObstructionRecord product_measure_obstruction(double q);

}  // namespace asepqj
