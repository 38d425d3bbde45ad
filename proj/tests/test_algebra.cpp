#include <doctest.h>

#include <cmath>

#include "asepqj/algebra.hpp"
#include "asepqj/qcalc.hpp"

using namespace asepqj;

namespace {

Matrix q_of_diag(const Matrix& j0, double q, double mult) {
    Matrix m(j0.rows(), j0.cols());
    for (std::size_t i = 0; i < j0.rows(); ++i) m(i, i) = std::pow(q, mult * j0(i, i));
    return m;
}

}  // namespace

TEST_CASE("local operators at j=1/2") {
    const QParams p(0.5, 1);
    const LocalOps ops = local_operators(p);
    CHECK(ops.jp(1, 0) == doctest::Approx(1.0));
    CHECK(ops.jp(0, 1) == 0.0);
    CHECK(ops.j0(0, 0) == doctest::Approx(-0.5));
    CHECK(ops.j0(1, 1) == doctest::Approx(0.5));
    CHECK(max_abs_diff(transpose(ops.jp), ops.jm) < 1e-15);
}

TEST_CASE("local commutation relations and casimir") {
    for (int two_j : {1, 2, 3}) {
        for (double q : {0.3, 0.7}) {
            const QParams p(q, two_j);
            const LocalOps ops = local_operators(p);
            // [Jp, Jm] = [2 J0]_q as a diagonal matrix function
            Matrix rhs(ops.j0.rows(), ops.j0.cols());
            for (std::size_t n = 0; n < rhs.rows(); ++n)
                rhs(n, n) = q_number(2.0 * ops.j0(n, n), q);
            CHECK(max_abs_diff(multiply(ops.jp, ops.jm) - multiply(ops.jm, ops.jp), rhs) < 1e-12);
            // [J0, J+-] = +- J+-
            CHECK(max_abs_diff(multiply(ops.j0, ops.jp) - multiply(ops.jp, ops.j0), ops.jp) <
                  1e-12);
            // K E = q^2 E K and K F = q^-2 F K
            CHECK(max_abs_diff(multiply(ops.k, ops.e), q * q * multiply(ops.e, ops.k)) < 1e-12);
            CHECK(max_abs_diff(multiply(ops.k, ops.f), (1.0 / (q * q)) * multiply(ops.f, ops.k)) <
                  1e-12);
            // casimir is the constant [j]_q [j+1]_q
            const Matrix c = local_casimir(p);
            const double ev = q_number(p.j(), q) * q_number(p.j() + 1.0, q);
            Matrix expect = Matrix::identity(c.rows());
            expect *= ev;
            CHECK(max_abs_diff(c, expect) < 1e-12 * std::fabs(ev));
        }
    }
}

TEST_CASE("two-site coproduct casimir") {
    const QParams p(0.5, 1);
    const Matrix dc = two_site_casimir_coproduct(p);
    const double c = bond_constant(p);
    // (Delta(C) + c)|0,0> = 0
    std::vector<double> vac(dc.rows(), 0.0);
    vac[0] = 1.0;
    std::vector<double> v = apply(dc, vac);
    v[0] += c;
    CHECK(max_abs(v) < 1e-12);
    // bond Hamiltonian is symmetric
    const Matrix h = two_site_hamiltonian(p);
    CHECK(max_abs_diff(h, transpose(h)) < 1e-12 * max_abs(h));
}

TEST_CASE("q -> 1 bond term reduces to the two-site symmetric chain") {
    const QParams p(1.0, 1);
    const LocalOps ops = local_operators(p);
    Matrix heis = kron(ops.jp, ops.jm) + kron(ops.jm, ops.jp) + 2.0 * kron(ops.j0, ops.j0);
    Matrix shift = Matrix::identity(4);
    shift *= -2.0 * p.j() * p.j();
    heis += shift;
    CHECK(max_abs_diff(two_site_hamiltonian(p), heis) < 1e-12);
}

TEST_CASE("coproduct preserves the commutation relations at L=2") {
    const QParams p(0.6, 2);
    const LocalOps ops = local_operators(p);
    const Matrix id = Matrix::identity(ops.jp.rows());
    const Matrix djp = kron(ops.jp, ops.q_mj0) + kron(ops.q_j0, ops.jp);
    const Matrix djm = kron(ops.jm, ops.q_mj0) + kron(ops.q_j0, ops.jm);
    const Matrix dj0 = kron(ops.j0, id) + kron(id, ops.j0);
    Matrix rhs(dj0.rows(), dj0.cols());
    for (std::size_t n = 0; n < rhs.rows(); ++n) rhs(n, n) = q_number(2.0 * dj0(n, n), p.q);
    CHECK(max_abs_diff(multiply(djp, djm) - multiply(djm, djp), rhs) < 1e-12);
    CHECK(max_abs_diff(multiply(dj0, djp) - multiply(djp, dj0), djp) < 1e-12);
}

TEST_CASE("hamiltonian structure across the parameter grid") {
    for (int two_j : {1, 2}) {
        for (double q : {0.4, 0.8}) {
            const QParams p(q, two_j);
            for (int L : {2, 3}) {
                const Matrix h = hamiltonian(p, L);
                const double scale = max_abs(h);
                CHECK(max_abs_diff(h, transpose(h)) < 1e-12 * scale);
                std::vector<double> vac(h.rows(), 0.0);
                vac[0] = 1.0;
                CHECK(max_abs(apply(h, vac)) < 1e-12 * scale);
                const std::vector<double> g = ground_state(p, L);
                CHECK(max_abs(apply(h, g)) < 1e-10 * scale * max_abs(g));
                // particle-number block structure: exact zeros across sectors
                const int d = p.local_dim();
                double cross = 0.0;
                for (std::size_t a = 0; a < h.rows(); ++a) {
                    int na = 0;
                    for (int v : index_config(a, L, d)) na += v;
                    for (std::size_t b = 0; b < h.cols(); ++b) {
                        int nb = 0;
                        for (int v : index_config(b, L, d)) nb += v;
                        if (na != nb) cross = std::max(cross, std::fabs(h(a, b)));
                    }
                }
                CHECK(cross <= 1e-14);
            }
        }
    }
    CHECK_THROWS_AS(hamiltonian(QParams(0.5, 3), 7, 4096), std::length_error);
}

TEST_CASE("chain symmetries commute with H") {
    const QParams p(0.7, 1);
    const int L = 3;
    const Matrix h = hamiltonian(p, L);
    const double hs = max_abs(h);
    for (ChainOpKind k : {ChainOpKind::Jp, ChainOpKind::Jm, ChainOpKind::J0, ChainOpKind::E,
                          ChainOpKind::F, ChainOpKind::Et, ChainOpKind::Ft}) {
        const Matrix s = chain_symmetry(k, p, L);
        CHECK(commutator_max_abs(h, s) < 1e-10 * hs * max_abs(s));
    }
    // J0_(L) is diagonal with entries sum_i (eta_i - j)
    const Matrix j0 = chain_symmetry(ChainOpKind::J0, p, L);
    for (std::size_t a = 0; a < j0.rows(); ++a) {
        double expect = 0.0;
        for (int v : index_config(a, L, p.local_dim())) expect += v - p.j();
        CHECK(j0(a, a) == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("transpose bridges between the tilde and plain chain operators") {
    for (int two_j : {1, 2}) {
        const QParams p(0.45, two_j);
        const int L = 3;
        const Matrix e = chain_symmetry(ChainOpKind::E, p, L);
        const Matrix f = chain_symmetry(ChainOpKind::F, p, L);
        const Matrix et = chain_symmetry(ChainOpKind::Et, p, L);
        const Matrix ft = chain_symmetry(ChainOpKind::Ft, p, L);
        CHECK(max_abs_diff(transpose(et), p.q * f) < 1e-12 * max_abs(f));
        CHECK(max_abs_diff(transpose(ft), (1.0 / p.q) * e) < 1e-12 * max_abs(e));
    }
}

TEST_CASE("exponential symmetries: closed form vs series, and commutation") {
    struct Combo { int two_j; double q; int L; };
    for (Combo c : {Combo{1, 0.5, 2}, {1, 0.5, 3}, {2, 0.7, 2}, {2, 0.4, 2}, {3, 0.6, 2}}) {
        const auto [two_j, q, L] = c;
        const QParams p(q, two_j);
        const Matrix h = hamiltonian(p, L);
        const double hs = max_abs(h);
        for (ExpSymKind k : {ExpSymKind::Sp, ExpSymKind::Sm, ExpSymKind::Spt, ExpSymKind::Smt}) {
            const Matrix closed = exponential_symmetry(k, p, L);
            const Matrix series = exponential_symmetry_series(k, p, L);
            CHECK(max_abs_diff(closed, series) < 1e-10 * max_abs(closed));
            CHECK(commutator_max_abs(h, closed) < 1e-10 * hs * max_abs(closed));
        }
    }
}

TEST_CASE("S+ support and positivity") {
    const QParams p(0.4, 2);
    const Matrix sp = exponential_symmetry(ExpSymKind::Sp, p, 2);
    const int d = p.local_dim();
    for (std::size_t a = 0; a < sp.rows(); ++a) {
        const auto eta = index_config(a, 2, d);
        for (std::size_t b = 0; b < sp.cols(); ++b) {
            const auto xi = index_config(b, 2, d);
            const bool ordered = xi[0] <= eta[0] && xi[1] <= eta[1];
            if (!ordered) CHECK(sp(a, b) == 0.0);
        }
    }
    // the ground state column has strictly positive entries
    const std::vector<double> g = ground_state_via_symmetry(p, 2);
    for (double v : g) CHECK(v > 0.0);
}

TEST_CASE("ground state from the closed form matches the symmetry route") {
    struct Combo { int two_j; double q; int L; };
    for (Combo c : {Combo{1, 0.5, 3}, {2, 0.7, 2}, {1, 0.9, 4}}) {
        const auto [two_j, q, L] = c;
        const QParams p(q, two_j);
        const auto a = ground_state(p, L);
        const auto b = ground_state_via_symmetry(p, L);
        CHECK(max_abs_diff(a, b) < 1e-12 * max_abs(a));
        CHECK(a[0] == doctest::Approx(1.0));  // empty configuration
    }
    // single-site factor at eta_1 = n is sqrt(binom(2j,n)_q) q^{n(1+j-2j)}
    const QParams p(0.6, 2);
    const auto g = ground_state(p, 2);
    const int n = 2;  // basis index of (2,0) at d=3 is 2*3 + 0 = 6
    const double expect = std::sqrt(q_binomial(2, n, p.q)) *
                          std::pow(p.q, n * (1.0 + p.j() - 2.0 * p.j()));
    CHECK(g[6] == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("pseudo-factorization") {
    {
        const FactorizationResidual r = verify_pseudo_factorization(QParams(0.5, 1), 2);
        CHECK(r.max() < 1e-12);
    }
    {
        const FactorizationResidual r = verify_pseudo_factorization(QParams(0.7, 2), 3);
        CHECK(r.max() < 1e-10);
    }
    {
        // near q = 1 both sides approach the ordinary exponential of the sum
        const QParams p(1.0 - 1e-6, 1);
        const FactorizationResidual r = verify_pseudo_factorization(p, 2);
        CHECK(r.max() < 1e-4);
    }
}

TEST_CASE("alternative ground transform from S~+ also recovers the generator") {
    const QParams p(0.5, 2);
    const int L = 2;
    const Matrix h = hamiltonian(p, L);
    const Matrix spt = exponential_symmetry(ExpSymKind::Spt, p, L);
    std::vector<double> vac(h.rows(), 0.0);
    vac[0] = 1.0;
    const std::vector<double> gt = apply(spt, vac);
    Matrix m(h.rows(), h.cols());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c) m(r, c) = h(r, c) * gt[c] / gt[r];
    // nonnegative off-diagonal entries, zero row sums, and equality with the rate generator
    double worst_off = 0.0, worst_row = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            s += m(r, c);
            if (r != c) worst_off = std::min(worst_off, m(r, c));
        }
        worst_row = std::max(worst_row, std::fabs(s));
    }
    CHECK(worst_off > -1e-12);
    CHECK(worst_row < 1e-10 * max_abs(m));
    const Matrix lrates = conjugate_by_ground_transform(h, p, L);
    CHECK(max_abs_diff(m, lrates) < 1e-10 * max_abs(lrates));
}

TEST_CASE("q-exponential of the chain raising operator matches S+ at L=2, j=1/2") {
    const QParams p(0.5, 1);
    const Matrix e = chain_symmetry(ChainOpKind::E, p, 2);
    const Matrix via_series = q_matrix_exponential(e, p.q * p.q);
    const Matrix closed = exponential_symmetry(ExpSymKind::Sp, p, 2);
    CHECK(max_abs_diff(via_series, closed) < 1e-13);
}
