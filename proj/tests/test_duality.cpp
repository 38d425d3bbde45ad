#include <doctest.h>

#include <cmath>
#include <random>

#include "asepqj/duality.hpp"
#include "asepqj/qcalc.hpp"

using namespace asepqj;

TEST_CASE("duality values: support and simple cases") {
    const QParams p(0.5, 2);
    const Window w(1, 3);
    const Configuration eta(w, {2, 1, 0});
    const Configuration zero(w, {0, 0, 0});
    CHECK(duality_value(DualityKind::d(), eta, zero, p) == doctest::Approx(1.0));
    const Configuration bad(w, {2, 2, 0});
    CHECK(duality_value(DualityKind::d(), eta, bad, p) == 0.0);
    CHECK(duality_value(DualityKind::dprime(), eta, bad, p) == 0.0);
    const Configuration other(Window(0, 2), {0, 0, 0});
    CHECK_THROWS_AS(duality_value(DualityKind::d(), eta, other, p), std::domain_error);
}

TEST_CASE("single dual particle closed form") {
    // D(eta, xi^{(i)}) = q^{4ji-1}/(q^{2j}-q^{-2j}) (q^{2 N_i} - q^{2 N_{i+1}})
    std::mt19937_64 rng(5);
    for (int two_j : {1, 2}) {
        const QParams p(0.45, two_j);
        const Window w(-3, 4);
        std::uniform_int_distribution<int> occ(0, two_j);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<int> e(static_cast<std::size_t>(w.size()));
            for (int& v : e) v = occ(rng);
            const Configuration eta(w, e);
            for (std::int64_t i = -2; i <= 3; ++i) {
                Configuration xi(w, std::vector<int>(static_cast<std::size_t>(w.size()), 0));
                xi.at_site(i) = 1;
                const double lhs = duality_value(DualityKind::d(), eta, xi, p);
                const double pref = std::pow(p.q, 4.0 * p.j() * i - 1.0) /
                                    (std::pow(p.q, 2.0 * p.j()) - std::pow(p.q, -2.0 * p.j()));
                const double rhs =
                    pref * (std::pow(p.q, 2.0 * eta.tail_count(i)) -
                            std::pow(p.q, 2.0 * eta.tail_count(i + 1)));
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("multi dual particle closed form") {
    std::mt19937_64 rng(9);
    const QParams p(0.6, 2);
    const Window w(-3, 3);
    std::uniform_int_distribution<int> occ(0, 2);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<int> e(static_cast<std::size_t>(w.size()));
        for (int& v : e) v = occ(rng);
        const Configuration eta(w, e);
        for (const std::vector<std::int64_t>& sites :
             {std::vector<std::int64_t>{-2, 1}, {-1, 0, 2}, {0, 1, 3}}) {
            Configuration xi(w, std::vector<int>(static_cast<std::size_t>(w.size()), 0));
            for (std::int64_t s : sites) xi.at_site(s) = 1;
            const double lhs = duality_value(DualityKind::d(), eta, xi, p);
            const int ell = static_cast<int>(sites.size());
            std::int64_t isum = 0;
            for (std::int64_t s : sites) isum += s;
            double rhs = std::pow(p.q, 4.0 * p.j() * isum - ell * ell) /
                         std::pow(std::pow(p.q, 2.0 * p.j()) - std::pow(p.q, -2.0 * p.j()), ell);
            for (std::int64_t s : sites)
                rhs *= std::pow(p.q, 2.0 * eta.tail_count(s)) -
                       std::pow(p.q, 2.0 * eta.tail_count(s + 1));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        }
    }
}

TEST_CASE("infinitesimal duality for all three kinds") {
    struct Combo { int two_j; double q; int L; };
    for (Combo c : {Combo{2, 0.5, 3}, {3, 0.7, 2}, {1, 0.4, 4}, {2, 0.9, 2}}) {
        const auto [two_j, q, L] = c;
        const QParams p(q, two_j);
        const Matrix m = generator_matrix(p, L);
        for (DualityKind kind :
             {DualityKind::d(), DualityKind::dprime(), DualityKind::diagonal(1.3)}) {
            const Matrix d = duality_matrix(kind, p, L);
            CHECK(duality_residual_for(m, d) < 1e-10 * max_abs(m) * max_abs(d));
        }
    }
}

TEST_CASE("semigroup duality at finite time") {
    const QParams p(0.5, 1);
    const int L = 3;
    const double t = 0.7;
    const Matrix m = generator_matrix(p, L);
    const Matrix d = duality_matrix(DualityKind::d(), p, L);
    Matrix tm = m;
    tm *= t;
    const Matrix pt = expm(tm);
    const Matrix lhs = multiply(pt, d);
    const Matrix rhs = multiply_nt(d, pt);
    CHECK(max_abs_diff(lhs, rhs) < 1e-8 * max_abs(lhs));
}

TEST_CASE("duality matrices from symmetries") {
    struct Combo { int two_j; double q; int L; };
    for (Combo c : {Combo{2, 0.5, 2}, {1, 0.7, 3}}) {
        const auto [two_j, q, L] = c;
        const QParams p(q, two_j);
        CHECK(sector_proportionality_residual(ExpSymKind::Sp, p, L) < 1e-10);
        CHECK(sector_proportionality_residual(ExpSymKind::Smt, p, L) < 1e-10);
        // both are duality matrices in their own right
        const Matrix m = generator_matrix(p, L);
        for (ExpSymKind k : {ExpSymKind::Sp, ExpSymKind::Smt}) {
            const Matrix x = duality_from_symmetry(k, p, L);
            CHECK(duality_residual_for(m, x) < 1e-10 * max_abs(m) * max_abs(x));
        }
        CHECK_THROWS_AS(duality_from_symmetry(ExpSymKind::Sm, p, L), std::invalid_argument);
    }
}

TEST_CASE("sector constants of the symmetry-built dualities") {
    // ratios are q^{-2(1+j)N(xi)} for S+ vs D, and q^{-2N(eta)-2jN(xi)} for
    // the transposed S~- vs D'
    const QParams p(0.55, 2);
    const int L = 2;
    const int d = p.local_dim();
    const Matrix x = duality_from_symmetry(ExpSymKind::Sp, p, L);
    const Matrix dd = duality_matrix(DualityKind::d(), p, L);
    const Matrix xm = duality_from_symmetry(ExpSymKind::Smt, p, L);
    const Matrix dp = duality_matrix(DualityKind::dprime(), p, L);
    for (std::size_t a = 0; a < x.rows(); ++a) {
        int na = 0;
        for (int v : index_config(a, L, d)) na += v;
        for (std::size_t b = 0; b < x.cols(); ++b) {
            int nb = 0;
            for (int v : index_config(b, L, d)) nb += v;
            CHECK(x(a, b) == doctest::Approx(std::pow(p.q, -2.0 * (1.0 + p.j()) * nb) * dd(a, b))
                                 .epsilon(1e-10));
            CHECK(xm(b, a) ==
                  doctest::Approx(std::pow(p.q, -2.0 * na - 2.0 * p.j() * nb) * dp(a, b))
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("diagonal duality inverts the alpha-family weights") {
    const QParams p(0.4, 1);
    const int L = 4;
    const double alpha = 0.8;
    const Matrix d = duality_matrix(DualityKind::diagonal(alpha), p, L);
    // d_alpha(eta,eta) * prod_i weight_i(eta_i) = 1 with the unnormalized weights
    for (std::size_t a = 0; a < d.rows(); ++a) {
        const auto eta = index_config(a, L, p.local_dim());
        double wprod = 1.0;
        for (int s = 0; s < L; ++s)
            wprod *= std::pow(alpha, eta[s]) * q_binomial(p.two_j, eta[s], p.q) *
                     std::pow(p.q, 2.0 * eta[s] * (1.0 + p.j() - 2.0 * p.j() * (s + 1)));
        CHECK(d(a, a) * wprod == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("schuetz reduction at j=1/2") {
    CHECK(schuetz_reduction_check(QParams(0.5, 1), 4) < 1e-10);
    CHECK(schuetz_reduction_check(QParams(0.8, 1), 3) < 1e-10);
    CHECK_THROWS_AS(schuetz_reduction_check(QParams(0.5, 2), 3), std::domain_error);
}
