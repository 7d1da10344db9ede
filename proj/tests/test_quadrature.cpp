// SPDX-License-Identifier: Apache-2.0
//
// nearcrb - Cramér-Rao bounds for near-field terminal positioning
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nearcrb/quadrature.hpp"

using namespace nearcrb;

TEST_CASE("polynomial exactness and simple areas") {
    // constant over the normalized square with tau = 0.5: area = tau^2/2
    const double a = 0.5 / std::sqrt(8.0);
    const auto c = integrate_2d([](double, double) { return 1.0; },
                                RectDomain::centered_square(a));
    CHECK(c.value == doctest::Approx(0.125).epsilon(1e-14));

    const auto p = integrate_2d([](double u, double v) { return u * u * v * v; },
                                RectDomain(-1.0, 1.0, -1.0, 1.0));
    CHECK(p.value == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("reference value of a smooth rational integrand") {
    // frozen from an independent adaptive evaluation
    const double a = 0.1 / std::sqrt(8.0);
    const auto r = integrate_2d(
        [](double u, double v) {
            const double w = u * u + v * v + 1.0;
            return (v * v * v * v + u * u * v * v + 1.0) / (w * w * w * w);
        },
        RectDomain::centered_square(a));
    CHECK(r.value == doctest::Approx(0.0049833842280891).epsilon(1e-10));
}

TEST_CASE("domain splitting invariance") {
    const auto f = [](double u, double v) {
        return std::exp(-0.5 * (u * u + v * v)) + 0.1 * u * v * v;
    };
    const RectDomain whole(-1.3, 2.1, -0.7, 1.9);
    const double mid_u = 0.4, mid_v = 0.6;
    const double total = integrate_2d(f, whole).value;
    const double parts = integrate_2d(f, RectDomain(-1.3, mid_u, -0.7, mid_v)).value +
                         integrate_2d(f, RectDomain(mid_u, 2.1, -0.7, mid_v)).value +
                         integrate_2d(f, RectDomain(-1.3, mid_u, mid_v, 1.9)).value +
                         integrate_2d(f, RectDomain(mid_u, 2.1, mid_v, 1.9)).value;
    CHECK(total == doctest::Approx(parts).epsilon(1e-13));
}

TEST_CASE("panel refinement stays within the reported error estimate") {
    std::mt19937 rng(11u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    int covered = 0;
    const int trials = 40;
    for (int t = 0; t < trials; ++t) {
        const double cx = uni(rng), cy = uni(rng);
        const double w = 0.3 + std::abs(uni(rng));
        const double amp = 1.0 + uni(rng);
        const auto f = [=](double u, double v) {
            return amp * std::exp(-((u - cx) * (u - cx) + (v - cy) * (v - cy)) / (w * w)) +
                   0.2 * u * u;
        };
        QuadratureSpec coarse;
        coarse.panels = 2;
        QuadratureSpec fine;
        fine.panels = 4;
        const auto r1 = integrate_2d(f, RectDomain(-2.0, 2.0, -2.0, 2.0), coarse);
        const auto r2 = integrate_2d(f, RectDomain(-2.0, 2.0, -2.0, 2.0), fine);
        const double change = std::abs(r1.value - r2.value);
        if (change <= std::max(r1.error_estimate, 1e-12 * std::abs(r1.value))) ++covered;
    }
    CHECK(covered >= trials * 95 / 100);
}

TEST_CASE("non-finite integrand reports the sample location") {
    CHECK_THROWS_AS(integrate_2d([](double u, double) { return 1.0 / (u - u); },
                                 RectDomain(0.0, 1.0, 0.0, 1.0)),
                    std::runtime_error);
}

TEST_CASE("riemann rule and complex wrapper") {
    QuadratureSpec spec;
    spec.rule = QuadratureRule::RiemannMidpoint;
    spec.order = 101;
    const auto r = integrate_2d([](double u, double v) { return u + v * v; },
                                RectDomain(0.0, 1.0, 0.0, 1.0), spec);
    CHECK(r.value == doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-4));

    const auto c = integrate_2d_complex(
        [](double u, double v) { return std::complex<double>{u * u, v}; },
        RectDomain(0.0, 1.0, -1.0, 1.0));
    CHECK(c.value.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(c.value.imag() == doctest::Approx(0.0));
}

TEST_CASE("aperture grid construction") {
    SUBCASE("single cell sits at the center") {
        const auto g = riemann_grid(SurfaceGeometry(2.0), 1);
        REQUIRE(g.size() == 1);
        CHECK(g[0].x == 0.0);
        CHECK(g[0].y == 0.0);
        CHECK(g[0].area == doctest::Approx(2.0));
    }
    SUBCASE("3x3 grid of a unit-area aperture") {
        const auto g = riemann_grid(SurfaceGeometry(std::sqrt(2.0)), 9);
        REQUIRE(g.size() == 9);
        CHECK(g[0].x == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
        CHECK(g[4].x == 0.0);
        CHECK(g[4].y == 0.0);
        CHECK(g[8].y == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        double area = 0.0;
        for (const auto& c : g) area += c.area;
        CHECK(area == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("cells partition the aperture area for any valid alpha") {
        for (const long alpha : {1L, 9L, 25L, 441L, 9801L}) {
            const auto g = riemann_grid(SurfaceGeometry(1.7), alpha);
            double area = 0.0;
            for (const auto& c : g) area += c.area;
            CHECK(area == doctest::Approx(1.7 * 1.7 / 2.0).epsilon(1e-12));
        }
    }
    SUBCASE("centers are exactly symmetric about the origin") {
        const auto g = riemann_grid(SurfaceGeometry(3.0), 49);
        const int n = 7;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto& a = g[static_cast<size_t>(i) * n + j];
                const auto& b = g[static_cast<size_t>(n - 1 - i) * n + (n - 1 - j)];
                CHECK(a.x == -b.x);  // bitwise, not approximate
                CHECK(a.y == -b.y);
            }
    }
    SUBCASE("invalid alpha is rejected") {
        CHECK_THROWS_AS(riemann_grid(SurfaceGeometry(1.0), 4), std::invalid_argument);
        CHECK_THROWS_AS(riemann_grid(SurfaceGeometry(1.0), 2), std::invalid_argument);
        CHECK_THROWS_AS(riemann_grid(SurfaceGeometry(1.0), 0), std::invalid_argument);
        CHECK_THROWS_AS(checked_odd_sqrt(16), std::invalid_argument);
        CHECK(checked_odd_sqrt(40401) == 201);
    }
}
