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

#pragma once

#include <array>
#include <limits>

#include "nearcrb/fields.hpp"
#include "nearcrb/quadrature.hpp"
#include "nearcrb/types.hpp"

namespace nearcrb {

/// 3x3 Fisher information for the terminal coordinates, in 1/m^2 scaled by
/// the linear SNR.
struct FimMatrix {
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
    double det() const;
    double max_offdiag() const;
    double max_diag() const;
    bool symmetric(double rel_tol = 1e-12) const;
};

enum class InversionMode { FullInvert, PerComponent };
enum class CrbPath { FullInversion, PerComponent };

/// Per-coordinate CRBs in m^2. Non-identifiable coordinates carry +inf.
struct CrbResult {
    double x = std::numeric_limits<double>::infinity();
    double y = std::numeric_limits<double>::infinity();
    double z = std::numeric_limits<double>::infinity();
    FieldModel model = FieldModel::Vef;
    CrbPath path = CrbPath::FullInversion;
    bool rank_deficient = false;

    bool identifiable(int axis) const {
        const double v = axis == 0 ? x : axis == 1 ? y : z;
        return std::isfinite(v);
    }
    double component(int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
    /// Root CRB in centimeters, the reporting unit.
    double rcrb_cm(int axis) const { return std::sqrt(component(axis)) * 100.0; }
};

/// Numerical controls for the engine.
struct Numerics {
    QuadratureSpec quad{};
    long riemann_alpha = 201L * 201L;
};

/// The twelve general-position information integrals of a pointwise model,
/// split into the phase part (which carries the k0^2 weight) and the
/// amplitude part, completed symmetrically; the information matrix is
/// 2*snr*(phase + amp). Diagonal entries are non-negative.
struct RhoGeneralTable {
    FieldModel model = FieldModel::Vef;
    std::array<std::array<double, 3>, 3> phase{};
    std::array<std::array<double, 3>, 3> amp{};
};
RhoGeneralTable rho_general(const TerminalPosition& p_t, const RectDomain& dom,
                            const PhysicalConfig& cfg, FieldModel model,
                            const QuadratureSpec& spec = {});

/// Fisher information over an arbitrary rectangle of the receiving plane,
/// assembled from the closed integrands of the per-model information density.
FimMatrix fim_vef(const TerminalPosition& p_t, const RectDomain& dom,
                  const PhysicalConfig& cfg, const QuadratureSpec& spec = {});
FimMatrix fim_sef(const TerminalPosition& p_t, const RectDomain& dom,
                  const PhysicalConfig& cfg, const QuadratureSpec& spec = {});

inline FimMatrix fim_vef(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                         const PhysicalConfig& cfg, const QuadratureSpec& spec = {}) {
    return fim_vef(p_t, RectDomain::aperture(geom), cfg, spec);
}
inline FimMatrix fim_sef(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                         const PhysicalConfig& cfg, const QuadratureSpec& spec = {}) {
    return fim_sef(p_t, RectDomain::aperture(geom), cfg, spec);
}

/// Independent assembly path: numerically integrates the outer products of the
/// analytic field gradients instead of the closed integrands. Used as the
/// cross-check oracle for fim_vef / fim_sef.
FimMatrix fim_from_gradients(const TerminalPosition& p_t, const RectDomain& dom,
                             const PhysicalConfig& cfg, FieldModel model,
                             const QuadratureSpec& spec = {});

/// Information of the single aggregated observation; rank <= 2 by construction.
FimMatrix fim_osef(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                   const PhysicalConfig& cfg, long alpha);

/// Invert a FIM into CRBs. Full inversion uses the explicit 3x3 cofactor
/// expansion and requires det > eps * trace^3 (eps = 1e-12); a numerically
/// diagonal but singular matrix degrades to per-component bounds, anything
/// else reports all coordinates non-identifiable rather than failing.
CrbResult crb_from_fim(const FimMatrix& fim, InversionMode mode,
                       FieldModel model = FieldModel::Vef);

/// One-stop evaluation at a terminal position. OSEF always reports
/// per-component bounds with the rank-deficiency flag set.
CrbResult crb_point(const TerminalPosition& p_t, const SurfaceGeometry& geom,
                    const PhysicalConfig& cfg, FieldModel model, const Numerics& num = {});

}  // namespace nearcrb
