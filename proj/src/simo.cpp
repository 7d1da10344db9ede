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

#include "nearcrb/simo.hpp"

#include <cmath>

namespace nearcrb {

namespace {

// Raw first-quadrant sub-domain of antenna (i, j), i, j in 1..n_s/2.
RectDomain antenna_domain(int i, int j, int n_s, double r_r, double d_r) {
    const double den = 2.0 * std::sqrt(2.0) * n_s;
    const double cx = (2.0 * i - 1.0) * r_r / den;
    const double cy = (2.0 * j - 1.0) * r_r / den;
    const double h = d_r / den;
    return RectDomain(cx - h, cx + h, cy - h, cy + h);
}

RectDomain scaled(const RectDomain& d, double s) {
    return RectDomain(d.u_min * s, d.u_max * s, d.v_min * s, d.v_max * s);
}

// Aggregated-observation derivative sum over one antenna's Riemann grid.
std::array<cplx, 3> osef_derivative_sums(const RectDomain& dom, double z, double k0,
                                         int cells_per_axis) {
    std::array<cplx, 3> acc{0.0, 0.0, 0.0};
    const auto grid = riemann_grid(dom, cells_per_axis);
    for (const auto& c : grid) {
        const double r = std::sqrt(c.x * c.x + c.y * c.y + z * z);
        const double rm52 = std::pow(r, -2.5);
        const double rm72 = rm52 / r;
        const double rm92 = rm72 / r;
        const double fxz = c.x * c.x + z * z;
        const cplx ph = std::sqrt(z * fxz) * std::exp(cplx{0.0, -k0 * r});
        const cplx g_r = 2.5 * rm92 + cplx{0.0, k0} * rm72;
        acc[0] += c.x * (g_r - rm52 / fxz) * ph * c.area;
        acc[1] += c.y * g_r * ph * c.area;
        acc[2] += ((3.0 * z * z + c.x * c.x) / (2.0 * z * fxz) * rm52 - cplx{0.0, k0} * z * rm72 -
                   2.5 * z * rm92) *
                  ph * c.area;
    }
    return acc;
}

}  // namespace

SimoLayout build_layout(int n_s, double r_r, double d_r, double z_t) {
    if (n_s != 1 && (n_s < 2 || n_s % 2 != 0))
        throw std::invalid_argument("antenna count per axis must be 1 or an even integer >= 2");
    if (!(r_r > 0.0 && d_r > 0.0 && z_t > 0.0))
        throw std::invalid_argument("layout dimensions must be positive");

    SimoLayout layout;
    layout.n_s = n_s;
    layout.r_r = r_r;
    layout.d_r = d_r;
    layout.z_t = z_t;
    layout.overlapping = d_r > r_r;
    if (n_s == 1) {
        const double a = SurfaceGeometry(d_r).half_side();
        layout.quadrant.push_back(RectDomain::centered_square(a));
        layout.quadrant_normalized.push_back(RectDomain::centered_square(a / z_t));
        return layout;
    }
    for (int j = 1; j <= n_s / 2; ++j)
        for (int i = 1; i <= n_s / 2; ++i) {
            const auto dom = antenna_domain(i, j, n_s, r_r, d_r);
            layout.quadrant.push_back(dom);
            layout.quadrant_normalized.push_back(scaled(dom, 1.0 / z_t));
        }
    return layout;
}

CrbResult crb_simo(const SimoLayout& layout, const PhysicalConfig& cfg, FieldModel model,
                   const Numerics& num) {
    if (layout.n_s == 1) {
        const CplScenario sc(layout.d_r / layout.z_t, layout.z_t, cfg, model);
        return crb_cpl(sc, num);
    }

    CrbResult out;
    out.model = model;
    out.path = CrbPath::PerComponent;
    const double k0 = cfg.wave_number();

    if (model == FieldModel::Osef) {
        const int cells = checked_odd_sqrt(num.riemann_alpha);
        const double d2 = layout.d_r * layout.d_r;
        const double n2 = static_cast<double>(layout.n_s) * layout.n_s;
        std::array<double, 3> info{0.0, 0.0, 0.0};
        for (const auto& dom : layout.quadrant) {
            const auto g = osef_derivative_sums(dom, layout.z_t, k0, cells);
            for (int a = 0; a < 3; ++a) info[a] += std::norm(g[a]);
        }
        // Fisher additivity over the n_s^2 independent antennas, one quadrant
        // computed and mirrored four ways; each antenna's observation carries
        // a 1/sqrt(antenna area) normalization, hence the n_s^2 factor.
        for (int a = 0; a < 3; ++a) info[a] *= cfg.snr * 16.0 * n2 / d2;
        out.x = info[0] > 0.0 ? 1.0 / info[0] : std::numeric_limits<double>::infinity();
        out.y = info[1] > 0.0 ? 1.0 / info[1] : std::numeric_limits<double>::infinity();
        out.z = info[2] > 0.0 ? 1.0 / info[2] : std::numeric_limits<double>::infinity();
        out.rank_deficient = true;
        return out;
    }

    const double k2 = k0 * k0;
    const double invz2 = 1.0 / (layout.z_t * layout.z_t);
    for (int axis = 0; axis < 3; ++axis) {
        double acc = 0.0;
        for (const auto& dom : layout.quadrant_normalized) {
            const double ph = integrate_2d(
                                  [&](double u, double v) {
                                      return cpl_information_integrand(model, 0, axis, u, v);
                                  },
                                  dom, num.quad)
                                  .value;
            const double am = integrate_2d(
                                  [&](double u, double v) {
                                      return cpl_information_integrand(model, 1, axis, u, v);
                                  },
                                  dom, num.quad)
                                  .value;
            acc += k2 * ph + invz2 * am;
        }
        const double crb = 1.0 / (cfg.snr * 8.0 * acc);
        (axis == 0 ? out.x : axis == 1 ? out.y : out.z) = crb;
    }
    return out;
}

CrbResult crb_simo_large_zt(const SimoLayout& layout, const PhysicalConfig& cfg,
                            FieldModel model, const Numerics& num) {
    if (model == FieldModel::Osef)
        throw std::invalid_argument("the simplification covers the pointwise models only");
    if (layout.n_s == 1) {
        const CplScenario sc(layout.d_r / layout.z_t, layout.z_t, cfg, model);
        return crb_cpl_large_zt(sc, num);
    }
    CrbResult out;
    out.model = model;
    out.path = CrbPath::PerComponent;
    const double k2 = cfg.wave_number() * cfg.wave_number();
    for (int axis = 0; axis < 3; ++axis) {
        double acc = 0.0;
        for (const auto& dom : layout.quadrant_normalized)
            acc += integrate_2d(
                       [&](double u, double v) {
                           return cpl_information_integrand(model, 0, axis, u, v);
                       },
                       dom, num.quad)
                       .value;
        const double crb = 1.0 / (cfg.snr * 8.0 * k2 * acc);
        (axis == 0 ? out.x : axis == 1 ? out.y : out.z) = crb;
    }
    return out;
}

FimMatrix simo_full_fim(const SimoLayout& layout, const PhysicalConfig& cfg, FieldModel model,
                        const QuadratureSpec& spec, int skip_antenna) {
    if (model == FieldModel::Osef)
        throw std::invalid_argument("full-layout path covers the pointwise models only");
    const TerminalPosition p_t = TerminalPosition::cpl(layout.z_t);
    FimMatrix total;
    int index = 0;
    const int half = layout.n_s == 1 ? 1 : layout.n_s / 2;
    for (int j = 0; j < (layout.n_s == 1 ? 1 : layout.n_s); ++j)
        for (int i = 0; i < (layout.n_s == 1 ? 1 : layout.n_s); ++i, ++index) {
            if (index == skip_antenna) continue;
            RectDomain dom = layout.n_s == 1
                                 ? layout.quadrant[0]
                                 : [&] {
                                       // Mirror the first-quadrant domain into
                                       // the (i, j) cell of the full grid.
                                       const auto& q =
                                           layout.quadrant[(j % half) * half + (i % half)];
                                       const bool flip_x = i >= half, flip_y = j >= half;
                                       const double u0 = flip_x ? -q.u_max : q.u_min;
                                       const double u1 = flip_x ? -q.u_min : q.u_max;
                                       const double v0 = flip_y ? -q.v_max : q.v_min;
                                       const double v1 = flip_y ? -q.v_min : q.v_max;
                                       return RectDomain(u0, u1, v0, v1);
                                   }();
            const FimMatrix f = model == FieldModel::Vef ? fim_vef(p_t, dom, cfg, spec)
                                                         : fim_sef(p_t, dom, cfg, spec);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) total(a, b) += f(a, b);
        }
    return total;
}

Lemma1Report lemma1_check(const SimoLayout& layout, const PhysicalConfig& cfg,
                          FieldModel model, const QuadratureSpec& spec) {
    if (layout.n_s < 2) throw std::invalid_argument("symmetry check needs n_s >= 2");
    const TerminalPosition p_t = TerminalPosition::cpl(layout.z_t);
    Lemma1Report rep;

    const FimMatrix full = simo_full_fim(layout, cfg, model, spec);
    rep.max_offdiag_ratio =
        full.max_offdiag() / std::min({full(0, 0), full(1, 1), full(2, 2)});

    // The four symmetric partners of the first quadrant antenna (reflections
    // through the axes, equivalently its 90-degree orbit for the diagonal
    // antenna) contribute identical diagonal information: the diagonal
    // integrands are even in both receiver coordinates.
    const auto& q = layout.quadrant[0];
    const auto antenna_fim = [&](const RectDomain& d) {
        return model == FieldModel::Vef ? fim_vef(p_t, d, cfg, spec)
                                        : fim_sef(p_t, d, cfg, spec);
    };
    const FimMatrix f0 = antenna_fim(q);
    const double scale = std::max(f0.max_diag(), 1e-300);
    const RectDomain partners[3] = {
        RectDomain(-q.u_max, -q.u_min, q.v_min, q.v_max),
        RectDomain(q.u_min, q.u_max, -q.v_max, -q.v_min),
        RectDomain(-q.u_max, -q.u_min, -q.v_max, -q.v_min)};
    for (const auto& p : partners) {
        const FimMatrix f1 = antenna_fim(p);
        for (int a = 0; a < 3; ++a)
            rep.max_partner_deviation =
                std::max(rep.max_partner_deviation, std::abs(f1(a, a) - f0(a, a)) / scale);
    }

    const FimMatrix broken = simo_full_fim(layout, cfg, model, spec, 0);
    rep.broken_offdiag_ratio =
        broken.max_offdiag() / std::min({broken(0, 0), broken(1, 1), broken(2, 2)});
    return rep;
}

}  // namespace nearcrb
