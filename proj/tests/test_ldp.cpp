#include <doctest.h>

#include <cmath>

#include "asepqj/ldp.hpp"
#include "asepqj/qcalc.hpp"
#include "asepqj/walker.hpp"

using namespace asepqj;

TEST_CASE("cumulant values") {
    const QParams p(0.5, 1);
    CHECK(cumulant(0.0, p) == 0.0);
    // derivative at 0 is the drift
    const double h = 1e-6;
    CHECK((cumulant(h, p) - cumulant(-h, p)) / (2 * h) ==
          doctest::Approx(WalkerLaw(p).drift()).epsilon(1e-8));
    // e^z = q^{4j} annihilates the cumulant (the q^{4jx} martingale)
    CHECK(cumulant(4.0 * p.j() * std::log(p.q), p) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("rate function vanishes at the drift and is positive elsewhere") {
    for (auto [two_j, q] : {std::pair<int, double>{1, 0.5}, {2, 0.7}, {3, 0.35}}) {
        const QParams p(q, two_j);
        const double drift = WalkerLaw(p).drift();
        CHECK(std::fabs(ldp_rate(drift, p)) < 1e-10);
        CHECK(ldp_rate(0.0, p) ==
              doctest::Approx(q_number_int(2 * two_j, q) - 2.0 * q_number_int(two_j, q))
                  .epsilon(1e-12));
        for (double x : {-1.0, 0.3 * drift, 2.0 * drift, drift + 5.0})
            CHECK(ldp_rate(x, p) > 0.0);
    }
}

TEST_CASE("closed form equals the numeric Legendre transform") {
    for (auto [two_j, q] : {std::pair<int, double>{1, 0.5}, {2, 0.7}}) {
        const QParams p(q, two_j);
        const double drift = WalkerLaw(p).drift();
        for (int k = 0; k < 50; ++k) {
            const double x = (drift + 8.0) * k / 49.0;
            CHECK(std::fabs(ldp_rate(x, p) - ldp_rate_numeric(x, p)) <= 1e-8);
        }
    }
}

TEST_CASE("golden section finds the minimum of a convex function") {
    const double m = golden_section_min([](double x) { return (x - 1.7) * (x - 1.7); }, -4.0,
                                        9.0, 1e-10);
    CHECK(m == doctest::Approx(1.7).epsilon(1e-8));
}

TEST_CASE("growth rate base cases") {
    const QParams p(0.5, 1);
    // empty measure: lambda = 1 on both sides, M_q = max(1, q^{4j}) = 1
    CHECK(growth_rate_base({1.0, 0.0}, p) == doctest::Approx(1.0));
    // M_q for Bernoulli(1/2) at q=1/2: both branches equal 0.625
    CHECK(growth_rate_base({0.5, 0.5}, p) == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("growth rate matches the long-time slope of the closed-form moment") {
    struct Combo { std::vector<double> mu; int two_j; double q; };
    for (const Combo& c : {Combo{{0.5, 0.5}, 1, 0.5}, {{0.5, 0.3, 0.2}, 2, 0.7}}) {
        const auto& [mu, two_j, q] = c;
        const QParams p(q, two_j);
        const double rate = growth_rate(mu, p);
        // least-squares slope of log m(t) over t in [4, 8]
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const int n = 9;
        for (int k = 0; k < n; ++k) {
            const double t = 4.0 + 4.0 * k / (n - 1);
            const double y = std::log(moment_product(mu, t, p));
            sx += t;
            sy += y;
            sxx += t * t;
            sxy += t * y;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(std::fabs(slope - rate) <= 0.15 * std::fabs(rate));
    }
}
