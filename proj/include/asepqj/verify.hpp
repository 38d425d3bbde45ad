#pragma once

#include <string>
#include <vector>

#include "asepqj/qparams.hpp"
#include "asepqj/report.hpp"

namespace asepqj {

struct VerifyRow {
    std::string name;
    std::string relation;  // the identity being checked, in formula shorthand
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    double tol_scale = 1.0;
    double alpha = 1.0;            // reversible-family parameter under test
    double diag_alpha = 1.3;       // diagonal duality parameter
    std::size_t dim_cap = 4096;
    double rate_corruption = 0.0;  // negative-control hook: scales one generator entry
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = true;

    Table table() const;
};

// The full identity suite at one (q, 2j, L): self-adjointness, vacuum and
// ground state, the 11 commuting operators, closed-form vs series symmetry
// matrices, pseudo-factorization, generator equivalence and sign structure,
// detailed balance, the three duality residuals, sector proportionality,
// the j=1/2 reduction, and the j=1 product-measure obstruction gap.
VerifyReport run_verify_suite(const QParams& params, int L, const VerifyOptions& opts = {});

}  // namespace asepqj
