#include <doctest.h>

#include <cmath>

#include "asepqj/bessel.hpp"

using namespace asepqj;

TEST_CASE("scaled Bessel against frozen high-precision values") {
    // reference values computed with 40-digit arithmetic
    struct Ref {
        int n;
        double w;
        double value;
    };
    const Ref refs[] = {
        {0, 0.0, 1.0},
        {0, 0.5, 0.64503527044915006811},
        {3, 0.5, 0.0016043415075654608433},
        {0, 10.0, 0.12783333716342860732},
        {7, 10.0, 0.01080634483049488614},
        {25, 10.0, 2.2445811417358202341e-12},
        {0, 30.0, 0.073145946482237293929},
        {12, 30.0, 0.0065841993920106101035},
        {60, 30.0, 1.4930811028383652171e-23},
        {0, 212.857, 0.027360355644354771655},
        {50, 212.857, 7.8056764325813985585e-05},
        {200, 212.857, 9.6294457387435090296e-41},
        {400, 212.857, 2.7947405993748363019e-139},
        {1, 0.001, 0.00049950031235422134737},
        {5, 100.0, 0.035229468707741778512},
        {150, 100.0, 3.1998849625777618914e-45},
    };
    for (const Ref& r : refs) {
        CHECK(bessel_i_scaled(r.n, r.w) == doctest::Approx(r.value).epsilon(1e-12));
        if (r.value > 0.0)
            CHECK(bessel_i_scaled_log(r.n, r.w) ==
                  doctest::Approx(std::log(r.value)).epsilon(1e-12));
    }
}

TEST_CASE("negative order symmetry and array consistency") {
    CHECK(bessel_i_scaled(-4, 7.5) == bessel_i_scaled(4, 7.5));
    for (double w : {0.4, 12.0, 80.0}) {
        const auto arr = bessel_i_scaled_array(40, w);
        for (int n = 0; n <= 40; ++n) {
            const double single = bessel_i_scaled(n, w);
            if (single > 1e-290)
                CHECK(arr[n] == doctest::Approx(single).epsilon(1e-11));
        }
    }
}

TEST_CASE("scaled sum identity: I_0 + 2 sum I_k = e^w") {
    for (double w : {0.8, 25.0, 150.0}) {
        const auto arr = bessel_i_scaled_array(static_cast<int>(w) + 200, w);
        double s = arr[0];
        for (std::size_t n = 1; n < arr.size(); ++n) s += 2.0 * arr[n];
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("agreement with the standard library Bessel") {
    for (double w : {0.3, 3.0, 18.0, 45.0}) {
        for (int n : {0, 1, 5, 11}) {
            const double ref = std::cyl_bessel_i(n, w) * std::exp(-w);
            CHECK(bessel_i_scaled(n, w) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}
