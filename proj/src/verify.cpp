#include "asepqj/verify.hpp"

#include <cmath>

#include "asepqj/algebra.hpp"
#include "asepqj/duality.hpp"
#include "asepqj/generator.hpp"
#include "asepqj/qcalc.hpp"

namespace asepqj {

Table VerifyReport::table() const {
    Table t;
    t.header = {"identity", "relation", "residual", "tolerance", "status"};
    for (const VerifyRow& r : rows)
        t.rows.push_back({r.name, r.relation, format_double(r.residual),
                          format_double(r.tolerance), r.pass ? "pass" : "FAIL"});
    return t;
}

VerifyReport run_verify_suite(const QParams& params, int L, const VerifyOptions& opts) {
    VerifyReport rep;
    const auto add = [&](std::string name, std::string relation, double residual, double tol) {
        const bool ok = residual <= tol * opts.tol_scale;
        rep.rows.push_back({std::move(name), std::move(relation), residual,
                            tol * opts.tol_scale, ok});
        rep.all_pass = rep.all_pass && ok;
    };

    const Matrix H = hamiltonian(params, L, opts.dim_cap);
    const double hscale = max_abs(H);
    const std::size_t dim = H.rows();

    add("self-adjoint", "H = H^T", max_abs_diff(H, transpose(H)), 1e-12 * hscale);

    {
        std::vector<double> vac(dim, 0.0);
        vac[0] = 1.0;
        add("vacuum", "H|0..0> = 0", max_abs(apply(H, vac)), 1e-12 * hscale);
    }

    const std::vector<double> g = ground_state(params, L);
    const double gscale = max_abs(g);
    add("ground state", "H g = 0", max_abs(apply(H, g)), 1e-10 * hscale * gscale);
    add("ground state routes", "g = S+ |0..0>",
        max_abs_diff(g, ground_state_via_symmetry(params, L)), 1e-12 * gscale);

    {
        const Matrix c = local_casimir(params);
        Matrix expect = Matrix::identity(c.rows());
        expect *= q_number(params.j(), params.q) * q_number(params.j() + 1.0, params.q);
        add("casimir", "C = [j][j+1] 1", max_abs_diff(c, expect), 1e-12 * max_abs(expect));
    }

    for (ChainOpKind k : {ChainOpKind::Jp, ChainOpKind::Jm, ChainOpKind::J0, ChainOpKind::E,
                          ChainOpKind::F, ChainOpKind::Et, ChainOpKind::Ft}) {
        const Matrix s = chain_symmetry(k, params, L);
        add(std::string("commutator ") + to_string(k), "[H,S] = 0", commutator_max_abs(H, s),
            1e-10 * hscale * max_abs(s));
    }

    for (ExpSymKind k : {ExpSymKind::Sp, ExpSymKind::Sm, ExpSymKind::Spt, ExpSymKind::Smt}) {
        const Matrix closed = exponential_symmetry(k, params, L);
        const Matrix series = exponential_symmetry_series(k, params, L);
        const double sscale = max_abs(closed);
        add(std::string("commutator ") + to_string(k), "[H,S] = 0",
            commutator_max_abs(H, closed), 1e-10 * hscale * sscale);
        add(std::string("closed vs series ") + to_string(k), "elements = q-exp series",
            max_abs_diff(closed, series), 1e-10 * sscale);
    }

    {
        const FactorizationResidual fr = verify_pseudo_factorization(params, L);
        add("pseudo-factorization raising", "exp(E^(L)) = ordered product", fr.raising,
            1e-10 * max_abs(exponential_symmetry(ExpSymKind::Sp, params, L)));
        add("pseudo-factorization lowering", "exp(F^(L)) = ordered product", fr.lowering,
            1e-10 * max_abs(exponential_symmetry(ExpSymKind::Sm, params, L)));
    }

    Matrix M = generator_matrix(params, L, BoundaryKind::Closed, opts.dim_cap);
    if (opts.rate_corruption != 0.0) {
        for (std::size_t r = 0; r < dim && opts.rate_corruption != 0.0; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (r != c && M(r, c) > 0.0) {
                    M(r, c) *= 1.0 + opts.rate_corruption;
                    r = dim;
                    break;
                }
    }
    const double mscale = max_abs(M);

    add("generator equivalence", "G^-1 H G = L(rates)",
        max_abs_diff(conjugate_by_ground_transform(H, params, L), M), 1e-10 * mscale);
    {
        double worst_row = 0.0, worst_off = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                s += M(r, c);
                if (r != c && M(r, c) < worst_off) worst_off = M(r, c);
            }
            worst_row = std::max(worst_row, std::fabs(s));
        }
        add("generator rows", "row sums = 0", worst_row, 1e-12 * mscale);
        add("generator signs", "off-diagonal >= 0", -worst_off, 1e-14);
    }

    {
        const DetailedBalanceResult db = detailed_balance_check(params, opts.alpha, L);
        add("detailed balance", "mu c(x,y) = mu c(y,x)", db.residual,
            1e-12 * std::max(db.scale, 1.0));
    }

    {
        // alpha = 1 reversible weights against the squared ground state
        std::vector<std::vector<double>> marg(static_cast<std::size_t>(L));
        for (int s = 0; s < L; ++s) marg[s] = reversible_marginal(params, 1.0, s + 1);
        double z = 0.0;
        for (double v : g) z += v * v;
        double worst = 0.0;
        const int d = params.local_dim();
        for (std::size_t x = 0; x < dim; ++x) {
            const std::vector<int> eta = index_config(x, L, d);
            double mu = 1.0;
            for (int s = 0; s < L; ++s) mu *= marg[s][eta[s]];
            worst = std::max(worst, std::fabs(mu - g[x] * g[x] / z));
        }
        add("reversible vs ground", "mu^(1) = g^2 / |g|^2", worst, 1e-12);
    }

    for (DualityKind kind :
         {DualityKind::d(), DualityKind::dprime(), DualityKind::diagonal(opts.diag_alpha)}) {
        const Matrix D = duality_matrix(kind, params, L);
        add(std::string("duality ") + to_string(kind.tag), "L D = D L^T",
            duality_residual_for(M, D), 1e-10 * mscale * max_abs(D));
    }

    add("duality from S+", "G^-1 S+ G^-1 ~ D (sectors)",
        sector_proportionality_residual(ExpSymKind::Sp, params, L), 1e-10);
    add("duality from S~-", "(G^-1 S~- G^-1)^T ~ D' (sectors)",
        sector_proportionality_residual(ExpSymKind::Smt, params, L), 1e-10);

    if (params.two_j == 1)
        add("schuetz reduction", "D' ~ prod q^{2k} q^{-2N} (sectors)",
            schuetz_reduction_check(params, L), 1e-10);

    if (!params.symmetric()) {
        const ObstructionRecord rec = product_measure_obstruction(params.q);
        // pass means the gap certificate is bounded away from zero
        const bool ok = std::fabs(rec.gap) > 1e-3;
        rep.rows.push_back({"obstruction gap", "delta - 2 alpha != 0 (j=1)", std::fabs(rec.gap),
                            1e-3, ok});
        rep.all_pass = rep.all_pass && ok;
    }

    return rep;
}

}  // namespace asepqj
