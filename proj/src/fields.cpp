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

#include "nearcrb/fields.hpp"

namespace nearcrb {

namespace {
constexpr cplx J{0.0, 1.0};

inline cplx propagation_phase(double k0, double r) {
    return std::exp(cplx{0.0, -k0 * r});
}

struct Separation {
    double dx, dy, z, r;
};

inline Separation separation(double x_r, double y_r, const TerminalPosition& p_t) {
    Separation s;
    s.dx = x_r - p_t.x;
    s.dy = y_r - p_t.y;
    s.z = p_t.z;
    s.r = std::sqrt(s.dx * s.dx + s.dy * s.dy + s.z * s.z);
    if (!(s.r > 0.0)) throw std::domain_error("zero separation");
    return s;
}
}  // namespace

cplx scalar_green(double r_rt, const PhysicalConfig& cfg) {
    if (!(r_rt > 0.0)) throw std::domain_error("scalar_green requires r > 0");
    const double k0 = cfg.wave_number();
    return -J * cfg.intrinsic_impedance / (2.0 * cfg.wavelength * r_rt) *
           propagation_phase(k0, r_rt);
}

ComplexMatrix3 tensor_green(const std::array<double, 3>& r_vec, GreenVariant variant,
                            const PhysicalConfig& cfg) {
    const double r = std::sqrt(r_vec[0] * r_vec[0] + r_vec[1] * r_vec[1] + r_vec[2] * r_vec[2]);
    if (!(r > 0.0)) throw std::domain_error("tensor_green requires a nonzero vector");
    if (variant != GreenVariant::ExactTensor && variant != GreenVariant::RadiativeTensor)
        throw std::invalid_argument("tensor_green supports the dyadic variants only");

    const double k0 = cfg.wave_number();
    const std::array<double, 3> n{r_vec[0] / r, r_vec[1] / r, r_vec[2] / r};
    const cplx gs = scalar_green(r, cfg);

    ComplexMatrix3 g{};
    if (variant == GreenVariant::RadiativeTensor) {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) g[a][b] = gs * ((a == b ? 1.0 : 0.0) - n[a] * n[b]);
        return g;
    }
    const cplx f_iso = 1.0 + J / (k0 * r) - 1.0 / (k0 * k0 * r * r);
    const cplx f_proj = 1.0 + 3.0 * J / (k0 * r) - 3.0 / (k0 * k0 * r * r);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            g[a][b] = gs * (f_iso * (a == b ? 1.0 : 0.0) - f_proj * n[a] * n[b]);
    return g;
}

ComplexField3 vef(double x_r, double y_r, const TerminalPosition& p_t,
                  const PhysicalConfig& cfg) {
    const auto s = separation(x_r, y_r, p_t);
    const double r3 = s.r * s.r * s.r;
    const cplx ph = cfg.e_in() * propagation_phase(cfg.wave_number(), s.r);
    ComplexField3 e;
    e.x = J * (s.dx * s.dy / r3) * ph;
    e.y = -J * (1.0 / s.r - s.dy * s.dy / r3) * ph;
    e.z = -J * (s.z * s.dy / r3) * ph;
    return e;
}

cplx sef(double x_r, double y_r, const TerminalPosition& p_t, const PhysicalConfig& cfg) {
    const auto s = separation(x_r, y_r, p_t);
    const double radicand = s.z * s.dx * s.dx + s.z * s.z * s.z;
    const double amp = std::sqrt(radicand) / std::pow(s.r, 2.5);
    return cfg.e_in() * amp * propagation_phase(cfg.wave_number(), s.r);
}

cplx osef(const TerminalPosition& p_t, const SurfaceGeometry& geom, const PhysicalConfig& cfg,
          long alpha) {
    const auto grid = riemann_grid(geom, alpha);
    cplx sum = 0.0;
    for (const auto& c : grid) sum += sef(c.x, c.y, p_t, cfg) * c.area;
    return std::sqrt(2.0 / (geom.diagonal * geom.diagonal)) * sum;
}

ComplexMatrix3 vef_gradient(double x_r, double y_r, const TerminalPosition& p_t,
                            const PhysicalConfig& cfg) {
    const auto s = separation(x_r, y_r, p_t);
    const double k0 = cfg.wave_number();
    const double r = s.r, x = s.dx, y = s.dy, z = s.z;
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r;
    const cplx ph = cfg.e_in() * propagation_phase(k0, r);

    // Written with the removable x/y factors expanded so on-axis points where
    // a separation component vanishes stay finite.
    ComplexMatrix3 g{};
    g[0][0] = (J * (3.0 * x * x * y / r5 - y / r3) - k0 * x * x * y / r4) * ph;
    g[0][1] = (J * (3.0 * x * y * y / r5 - x / r3) - k0 * x * y * y / r4) * ph;
    g[0][2] = (x * y * z) * (-3.0 * J / r5 + k0 / r4) * ph;
    g[1][0] = x * (J * (3.0 * y * y - r2) / r5 - k0 * (y * y - r2) / r4) * ph;
    g[1][1] = y * (J * (3.0 * y * y - 3.0 * r2) / r5 - k0 * (y * y - r2) / r4) * ph;
    g[1][2] = z * (J * (r2 - 3.0 * y * y) / r5 + k0 * (y * y - r2) / r4) * ph;
    g[2][0] = (x * y * z) * (-3.0 * J / r5 + k0 / r4) * ph;
    g[2][1] = (J * (z / r3 - 3.0 * y * y * z / r5) + k0 * y * y * z / r4) * ph;
    g[2][2] = (J * (3.0 * y * z * z / r5 - y / r3) - k0 * y * z * z / r4) * ph;
    return g;
}

std::array<cplx, 3> sef_gradient(double x_r, double y_r, const TerminalPosition& p_t,
                                 const PhysicalConfig& cfg) {
    const auto s = separation(x_r, y_r, p_t);
    const double k0 = cfg.wave_number();
    const double x = s.dx, y = s.dy, z = s.z, r = s.r;
    const double f_xz = x * x + z * z;
    const double rm52 = std::pow(r, -2.5);
    const double rm72 = rm52 / r;
    const double rm92 = rm72 / r;
    const cplx f_ez =
        cfg.e_in() * std::sqrt(z * f_xz) * propagation_phase(k0, r);

    std::array<cplx, 3> g;
    g[0] = x * (J * k0 * rm72 + 2.5 * rm92 - rm52 / f_xz) * f_ez;
    g[1] = y * (2.5 * rm92 + J * k0 * rm72) * f_ez;
    g[2] = ((3.0 * z * z + x * x) / (2.0 * z * f_xz) * rm52 - J * k0 * z * rm72 -
            2.5 * z * rm92) *
           f_ez;
    return g;
}

cplx green_fresnel(double x_r, double y_r, const TerminalPosition& p_t,
                   const PhysicalConfig& cfg) {
    const double r_to = p_t.range();
    const double k0 = cfg.wave_number();
    double cx, cy, cz;
    p_t.direction_cosines(cx, cy, cz);
    const double along = x_r * cx + y_r * cy;
    const double phase =
        r_to - along + (x_r * x_r + y_r * y_r - along * along) / (2.0 * r_to);
    return -J * cfg.intrinsic_impedance / (2.0 * cfg.wavelength * r_to) *
           std::exp(cplx{0.0, -k0 * phase});
}

cplx green_planewave(double x_r, double y_r, const TerminalPosition& p_t,
                     const PhysicalConfig& cfg) {
    const double r_to = p_t.range();
    const double k0 = cfg.wave_number();
    double cx, cy, cz;
    p_t.direction_cosines(cx, cy, cz);
    const double along = x_r * cx + y_r * cy;
    return -J * cfg.intrinsic_impedance / (2.0 * cfg.wavelength * r_to) *
           std::exp(cplx{0.0, -k0 * (r_to - along)});
}

}  // namespace nearcrb
