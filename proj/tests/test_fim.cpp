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

#include "oracles.hpp"

using namespace nearcrb;

namespace {
const PhysicalConfig kCfg(0.01, 10.0);

bool psd_by_minors(const FimMatrix& f, double tol) {
    const double t = f.trace();
    if (f(0, 0) < -tol * t || f(1, 1) < -tol * t || f(2, 2) < -tol * t) return false;
    const double m12 = f(0, 0) * f(1, 1) - f(0, 1) * f(0, 1);
    const double m13 = f(0, 0) * f(2, 2) - f(0, 2) * f(0, 2);
    const double m23 = f(1, 1) * f(2, 2) - f(1, 2) * f(1, 2);
    if (m12 < -tol * t * t || m13 < -tol * t * t || m23 < -tol * t * t) return false;
    return f.det() >= -tol * t * t * t;
}
}  // namespace

TEST_CASE("boresight information is diagonal") {
    for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
        const auto f = m == FieldModel::Vef
                           ? fim_vef(TerminalPosition::cpl(6.0), SurfaceGeometry(3.0), kCfg)
                           : fim_sef(TerminalPosition::cpl(6.0), SurfaceGeometry(3.0), kCfg);
        const double min_diag = std::min({f(0, 0), f(1, 1), f(2, 2)});
        CHECK(f.max_offdiag() < 1e-10 * min_diag);
        CHECK(f.symmetric());
        CHECK(psd_by_minors(f, 1e-12));
    }
}

TEST_CASE("closed integrands equal gradient outer products") {
    std::mt19937 rng(37u);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const TerminalPosition p_t(3.0 * uni(rng), 3.0 * uni(rng), 1.0 + 6.0 * std::abs(uni(rng)));
        const SurfaceGeometry geom(0.5 + 3.0 * std::abs(uni(rng)));
        const auto dom = RectDomain::aperture(geom);
        for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
            const FimMatrix a = m == FieldModel::Vef ? fim_vef(p_t, dom, kCfg)
                                                     : fim_sef(p_t, dom, kCfg);
            const FimMatrix b = fim_from_gradients(p_t, dom, kCfg, m);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    worst = std::max(worst, std::abs(a(r, c) - b(r, c)) / a.max_diag());
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("general integral table") {
    const TerminalPosition p_t(1.2, -0.8, 4.0);
    const auto dom = RectDomain::aperture(SurfaceGeometry(2.5));
    for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
        const auto t = rho_general(p_t, dom, kCfg, m);
        for (int a = 0; a < 3; ++a) {
            CHECK(t.phase[a][a] >= 0.0);
            CHECK(t.amp[a][a] >= 0.0);
        }
        // the information matrix is the snr-scaled sum of the parts
        const auto f = m == FieldModel::Vef ? fim_vef(p_t, dom, kCfg) : fim_sef(p_t, dom, kCfg);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                CHECK(f(a, b) ==
                      doctest::Approx(2.0 * kCfg.snr * (t.phase[a][b] + t.amp[a][b]))
                          .epsilon(1e-9));
    }
    CHECK_THROWS_AS(rho_general(p_t, dom, kCfg, FieldModel::Osef), std::invalid_argument);
}

TEST_CASE("information is linear in the snr") {
    const TerminalPosition p_t(0.4, -0.7, 5.0);
    const SurfaceGeometry geom(2.0);
    PhysicalConfig amplified = kCfg;
    amplified.snr = 100.0;
    const auto f1 = fim_vef(p_t, geom, kCfg);
    const auto f10 = fim_vef(p_t, geom, amplified);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(f10(r, c) == doctest::Approx(10.0 * f1(r, c)).epsilon(1e-14));
}

TEST_CASE("cofactor inversion") {
    SUBCASE("diagonal matrix, both modes") {
        FimMatrix f;
        f(0, 0) = 2.0;
        f(1, 1) = 5.0;
        f(2, 2) = 0.25;
        for (const auto mode : {InversionMode::FullInvert, InversionMode::PerComponent}) {
            const auto r = crb_from_fim(f, mode);
            CHECK(r.x == doctest::Approx(0.5).epsilon(1e-15));
            CHECK(r.y == doctest::Approx(0.2).epsilon(1e-15));
            CHECK(r.z == doctest::Approx(4.0).epsilon(1e-15));
        }
    }
    SUBCASE("random SPD matrices match a generic inverse") {
        std::mt19937 rng(41u);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        for (int i = 0; i < 200; ++i) {
            // SPD via A^T A plus a ridge
            double a[3][3];
            for (auto& row : a)
                for (auto& v : row) v = uni(rng);
            FimMatrix f;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    double s = r == c ? 0.3 : 0.0;
                    for (int k = 0; k < 3; ++k) s += a[k][r] * a[k][c];
                    f(r, c) = s;
                }
            const auto mine = crb_from_fim(f, InversionMode::FullInvert);
            const auto ref = oracles::inverse_diagonal_ge(f);
            CHECK(mine.x == doctest::Approx(ref[0]).epsilon(1e-12));
            CHECK(mine.y == doctest::Approx(ref[1]).epsilon(1e-12));
            CHECK(mine.z == doctest::Approx(ref[2]).epsilon(1e-12));
            CHECK(mine.path == CrbPath::FullInversion);
        }
    }
    SUBCASE("rank-deficient diagonal reports infinities") {
        FimMatrix f;
        f(2, 2) = 4.0;
        const auto r = crb_from_fim(f, InversionMode::FullInvert);
        CHECK(!r.identifiable(0));
        CHECK(!r.identifiable(1));
        CHECK(r.z == doctest::Approx(0.25));
        CHECK(r.rank_deficient);
    }
    SUBCASE("singular coupled matrix is non-identifiable, not an error") {
        FimMatrix f;
        // rank-1 outer product of (1, 2, 3)
        const double v[3] = {1.0, 2.0, 3.0};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) f(r, c) = v[r] * v[c];
        const auto r = crb_from_fim(f, InversionMode::FullInvert);
        CHECK(!r.identifiable(0));
        CHECK(!r.identifiable(1));
        CHECK(!r.identifiable(2));
        CHECK(r.rank_deficient);
    }
}

TEST_CASE("aggregated-observation information") {
    const SurfaceGeometry geom(2.0);
    SUBCASE("boresight keeps only range information") {
        const auto f = fim_osef(TerminalPosition::cpl(6.0), geom, kCfg, 101 * 101);
        CHECK(f(2, 2) > 0.0);
        CHECK(f(0, 0) < 1e-18 * f(2, 2));
        CHECK(f(1, 1) < 1e-18 * f(2, 2));
        const auto r = crb_from_fim(f, InversionMode::FullInvert, FieldModel::Osef);
        CHECK(!r.identifiable(0));
        CHECK(!r.identifiable(1));
        CHECK(r.identifiable(2));
    }
    SUBCASE("rank stays at most two off the boresight") {
        const auto f = fim_osef(TerminalPosition(0.5, 0.9, 6.0), geom, kCfg, 101 * 101);
        CHECK(std::abs(f.det()) <= 1e-12 * std::pow(f.trace(), 3));
        CHECK(psd_by_minors(f, 1e-12));
    }
    SUBCASE("grid refinement converges") {
        const auto a = fim_osef(TerminalPosition::cpl(6.0), geom, kCfg, 201L * 201L);
        const auto b = fim_osef(TerminalPosition::cpl(6.0), geom, kCfg, 401L * 401L);
        CHECK(std::abs(a(2, 2) - b(2, 2)) / b(2, 2) < 5e-3);
    }
}

TEST_CASE("point evaluation reproduces the reference accuracy values") {
    Numerics num;
    SUBCASE("3 m aperture at 6 m") {
        const auto r =
            crb_point(TerminalPosition::cpl(6.0), SurfaceGeometry(3.0), kCfg, FieldModel::Vef, num);
        CHECK(r.rcrb_cm(0) == doctest::Approx(1.02).epsilon(0.02));
        CHECK(r.rcrb_cm(2) == doctest::Approx(0.103).epsilon(0.02));
        CHECK(r.path == CrbPath::FullInversion);
    }
    SUBCASE("0.5 m aperture at 6 m") {
        const auto r =
            crb_point(TerminalPosition::cpl(6.0), SurfaceGeometry(0.5), kCfg, FieldModel::Vef, num);
        CHECK(r.rcrb_cm(0) == doctest::Approx(35.5).epsilon(0.02));
        CHECK(r.rcrb_cm(2) == doctest::Approx(0.604).epsilon(0.02));
    }
    SUBCASE("scalar bound dominates the vector bound off the boresight") {
        const TerminalPosition p(2.0, 3.0, 6.0);
        const SurfaceGeometry g(9.0);
        const auto v = crb_point(p, g, kCfg, FieldModel::Vef, num);
        const auto s = crb_point(p, g, kCfg, FieldModel::Sef, num);
        CHECK(s.x >= v.x * (1.0 - 1e-10));
        CHECK(s.y >= v.y * (1.0 - 1e-10));
        CHECK(s.z >= v.z * (1.0 - 1e-10));
    }
    SUBCASE("aggregated model reports per-component bounds with a rank flag") {
        const auto r = crb_point(TerminalPosition(0.5, 0.5, 6.0), SurfaceGeometry(2.0), kCfg,
                                 FieldModel::Osef, num);
        CHECK(r.path == CrbPath::PerComponent);
        CHECK(r.rank_deficient);
    }
}
