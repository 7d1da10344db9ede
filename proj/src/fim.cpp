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

#include "nearcrb/fim.hpp"

#include <algorithm>
#include <cmath>

namespace nearcrb {

namespace {

constexpr double kSingularEps = 1e-12;   // det threshold relative to trace^3
constexpr double kInfoFloor = 1e-18;     // diagonal floor relative to max diagonal

struct DensityParts {
    double phase, amp;
};

// Information density of the vector-field observation for coordinate pair
// (m, n), split into the part that multiplies k0^2 (propagation phase) and the
// amplitude part. Both together are an exact expansion of
// Re{ sum_k dh_k/dxi_n * conj(dh_k/dxi_m) }.
DensityParts vef_density(int m, int n, double x, double y, double z) {
    const double f = x * x + z * z;
    const double r2 = x * x + y * y + z * z;
    const double r4 = r2 * r2;
    const double r6 = r4 * r2;
    const double r8 = r4 * r4;
    if (m == 0 && n == 0)
        return {x * x * f / r6, ((x * x + y * y) * r2 - 3.0 * x * x * y * y) / r8};
    if (m == 1 && n == 1) return {y * y * f / r6, f * (f + 4.0 * y * y) / r8};
    if (m == 2 && n == 2)
        return {z * z * f / r6, (y * y * (r2 - 2.0 * z * z) + z * z * (z * z + x * x)) / r8};
    if ((m == 0 && n == 1) || (m == 1 && n == 0))
        return {x * y * f / r6, x * y * (x * x - 2.0 * y * y + z * z) / r8};
    if ((m == 0 && n == 2) || (m == 2 && n == 0))
        return {-x * z * f / r6, x * z * (2.0 * y * y - x * x - z * z) / r8};
    return {-y * z * f / r6, y * z * (2.0 * y * y - x * x - z * z) / r8};
}

// Same for the scalar-field observation.
DensityParts sef_density(int m, int n, double x, double y, double z) {
    const double f = x * x + z * z;
    const double r2 = x * x + y * y + z * z;
    const double r = std::sqrt(r2);
    const double r4 = r2 * r2;
    const double r7 = r4 * r2 * r;
    const double r9 = r7 * r2;
    if (m == 0 && n == 0)
        return {z * x * x * f / r7, z * x * x * (6.25 * f - 5.0 * r2 + r4 / f) / r9};
    if (m == 1 && n == 1) return {z * y * y * f / r7, 6.25 * z * y * y * f / r9};
    if (m == 2 && n == 2) {
        const double num = x * x * (r2 - 2.0 * z * z) + z * z * (3.0 * y * y - 2.0 * z * z);
        return {z * z * z * f / r7, num * num / (4.0 * z * f * r9)};
    }
    if ((m == 0 && n == 1) || (m == 1 && n == 0))
        return {z * x * y * f / r7, z * x * y * (6.25 * f - 2.5 * r2) / r9};
    if ((m == 0 && n == 2) || (m == 2 && n == 0)) {
        const double f3z = (x * x + 3.0 * z * z) * r4;
        const double f5z = 2.5 * (x * x + 5.0 * z * z) * r2;
        return {-z * z * x * f / r7, x * (f5z * f - f3z - 12.5 * z * z * f * f) / (2.0 * f * r9)};
    }
    const double f3z = (x * x + 3.0 * z * z) * r4;
    return {-z * z * y * f / r7, 5.0 * y * (f3z / r2 - 5.0 * z * z * f) / (4.0 * r9)};
}

DensityParts density_parts(FieldModel model, int m, int n, double x, double y, double z) {
    return model == FieldModel::Vef ? vef_density(m, n, x, y, z) : sef_density(m, n, x, y, z);
}

FimMatrix assemble(const TerminalPosition& p_t, const RectDomain& dom,
                   const PhysicalConfig& cfg, const QuadratureSpec& spec, FieldModel model) {
    const double k2 = cfg.wave_number() * cfg.wave_number();
    FimMatrix fim;
    for (int m = 0; m < 3; ++m)
        for (int n = m; n < 3; ++n) {
            const auto res = integrate_2d(
                [&](double xr, double yr) {
                    const auto d = density_parts(model, m, n, xr - p_t.x, yr - p_t.y, p_t.z);
                    return k2 * d.phase + d.amp;
                },
                dom, spec);
            fim(m, n) = 2.0 * cfg.snr * res.value;
            fim(n, m) = fim(m, n);
        }
    return fim;
}

}  // namespace

double FimMatrix::det() const {
    return 2.0 * m[0][1] * m[0][2] * m[1][2] + m[0][0] * m[1][1] * m[2][2] -
           m[0][2] * m[0][2] * m[1][1] - m[0][0] * m[1][2] * m[1][2] -
           m[0][1] * m[0][1] * m[2][2];
}

double FimMatrix::max_offdiag() const {
    return std::max({std::abs(m[0][1]), std::abs(m[0][2]), std::abs(m[1][2]),
                     std::abs(m[1][0]), std::abs(m[2][0]), std::abs(m[2][1])});
}

double FimMatrix::max_diag() const { return std::max({m[0][0], m[1][1], m[2][2]}); }

bool FimMatrix::symmetric(double rel_tol) const {
    const double scale = std::max(max_diag(), 1e-300);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(m[i][j] - m[j][i]) > rel_tol * scale) return false;
    return true;
}

FimMatrix fim_vef(const TerminalPosition& p_t, const RectDomain& dom,
                  const PhysicalConfig& cfg, const QuadratureSpec& spec) {
    return assemble(p_t, dom, cfg, spec, FieldModel::Vef);
}

FimMatrix fim_sef(const TerminalPosition& p_t, const RectDomain& dom,
                  const PhysicalConfig& cfg, const QuadratureSpec& spec) {
    return assemble(p_t, dom, cfg, spec, FieldModel::Sef);
}

RhoGeneralTable rho_general(const TerminalPosition& p_t, const RectDomain& dom,
                            const PhysicalConfig& cfg, FieldModel model,
                            const QuadratureSpec& spec) {
    if (model == FieldModel::Osef)
        throw std::invalid_argument("integral tables exist for the pointwise models only");
    const double k2 = cfg.wave_number() * cfg.wave_number();
    RhoGeneralTable t;
    t.model = model;
    for (int m = 0; m < 3; ++m)
        for (int n = m; n < 3; ++n) {
            t.phase[m][n] = k2 * integrate_2d(
                                     [&](double xr, double yr) {
                                         return density_parts(model, m, n, xr - p_t.x,
                                                              yr - p_t.y, p_t.z)
                                             .phase;
                                     },
                                     dom, spec)
                                     .value;
            t.amp[m][n] = integrate_2d(
                              [&](double xr, double yr) {
                                  return density_parts(model, m, n, xr - p_t.x, yr - p_t.y,
                                                       p_t.z)
                                      .amp;
                              },
                              dom, spec)
                              .value;
            t.phase[n][m] = t.phase[m][n];
            t.amp[n][m] = t.amp[m][n];
        }
    return t;
}

FimMatrix fim_from_gradients(const TerminalPosition& p_t, const RectDomain& dom,
                             const PhysicalConfig& cfg, FieldModel model,
                             const QuadratureSpec& spec) {
    if (model == FieldModel::Osef)
        throw std::invalid_argument("gradient-path assembly covers pointwise observations only");
    const double e2 = cfg.e_in() * cfg.e_in();
    FimMatrix fim;
    for (int m = 0; m < 3; ++m)
        for (int n = m; n < 3; ++n) {
            const auto res = integrate_2d(
                [&](double xr, double yr) {
                    if (model == FieldModel::Vef) {
                        const auto g = vef_gradient(xr, yr, p_t, cfg);
                        double acc = 0.0;
                        for (int k = 0; k < 3; ++k)
                            acc += (g[k][n] * std::conj(g[k][m])).real();
                        return acc / e2;
                    }
                    const auto g = sef_gradient(xr, yr, p_t, cfg);
                    return (g[n] * std::conj(g[m])).real() / e2;
                },
                dom, spec);
            fim(m, n) = 2.0 * cfg.snr * res.value;
            fim(n, m) = fim(m, n);
        }
    return fim;
}

FimMatrix fim_osef(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                   const PhysicalConfig& cfg, long alpha) {
    const auto grid = riemann_grid(geom, alpha);
    const double e_in = cfg.e_in();
    std::array<cplx, 3> g{0.0, 0.0, 0.0};
    for (const auto& c : grid) {
        const auto gs = sef_gradient(c.x, c.y, p_t, cfg);
        for (int k = 0; k < 3; ++k) g[k] += gs[k] * c.area;
    }
    for (auto& v : g) v /= e_in;

    const double norm = 2.0 / (geom.diagonal * geom.diagonal);
    FimMatrix fim;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n)
            fim(m, n) = 2.0 * cfg.snr * norm * (g[n] * std::conj(g[m])).real();
    return fim;
}

CrbResult crb_from_fim(const FimMatrix& fim, InversionMode mode, FieldModel model) {
    CrbResult out;
    out.model = model;
    const double tr = fim.trace();
    const double floor = kInfoFloor * std::max(fim.max_diag(), 0.0);

    if (mode == InversionMode::FullInvert) {
        const double det = fim.det();
        if (det > kSingularEps * tr * tr * tr) {
            out.path = CrbPath::FullInversion;
            out.x = (fim(1, 1) * fim(2, 2) - fim(1, 2) * fim(1, 2)) / det;
            out.y = (fim(0, 0) * fim(2, 2) - fim(0, 2) * fim(0, 2)) / det;
            out.z = (fim(0, 0) * fim(1, 1) - fim(0, 1) * fim(0, 1)) / det;
            return out;
        }
        if (fim.max_offdiag() > 1e-10 * std::max(fim.max_diag(), 1e-300)) {
            // Singular with genuine cross-coupling: nothing is identifiable.
            out.path = CrbPath::FullInversion;
            out.rank_deficient = true;
            return out;
        }
        out.rank_deficient = true;
        // fall through to the per-component diagonal inverse
    }
    out.path = CrbPath::PerComponent;
    out.x = fim(0, 0) > floor ? 1.0 / fim(0, 0) : std::numeric_limits<double>::infinity();
    out.y = fim(1, 1) > floor ? 1.0 / fim(1, 1) : std::numeric_limits<double>::infinity();
    out.z = fim(2, 2) > floor ? 1.0 / fim(2, 2) : std::numeric_limits<double>::infinity();
    return out;
}

CrbResult crb_point(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                    const PhysicalConfig& cfg, FieldModel model, const Numerics& num) {
    if (model == FieldModel::Osef) {
        const auto fim = fim_osef(p_t, geom, cfg, num.riemann_alpha);
        auto out = crb_from_fim(fim, InversionMode::PerComponent, model);
        out.rank_deficient = true;  // single complex observation, rank <= 2
        return out;
    }
    const auto fim = model == FieldModel::Vef ? fim_vef(p_t, geom, cfg, num.quad)
                                              : fim_sef(p_t, geom, cfg, num.quad);
    return crb_from_fim(fim, InversionMode::FullInvert, model);
}

}  // namespace nearcrb
