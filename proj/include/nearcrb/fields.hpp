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
#include <complex>

#include "nearcrb/quadrature.hpp"
#include "nearcrb/types.hpp"

namespace nearcrb {

using cplx = std::complex<double>;

/// Y-oriented Hertzian dipole drive.
struct DipoleSource {
    double current;  // A
    double length;   // m

    DipoleSource(double i_in, double l_t) : current(i_in), length(l_t) {
        if (!(current > 0.0 && length > 0.0))
            throw std::invalid_argument("dipole drive must be positive");
    }
    double e_in(const PhysicalConfig& cfg) const {
        return cfg.intrinsic_impedance * current * length / (2.0 * cfg.wavelength);
    }
};

struct ComplexField3 {
    cplx x, y, z;
    double squared_norm() const { return std::norm(x) + std::norm(y) + std::norm(z); }
};

using ComplexMatrix3 = std::array<std::array<cplx, 3>, 3>;

enum class GreenVariant { ExactTensor, RadiativeTensor, Fresnel, PlaneWave };

/// Scalar Green function -j*eta/(2*lambda*r) * exp(-j*k0*r).
cplx scalar_green(double r_rt, const PhysicalConfig& cfg);

/// Dyadic Green function for a separation vector. The exact form keeps the
/// 1/(k0 r) and 1/(k0 r)^2 correction terms; the radiative form keeps only the
/// transverse projector and is the default used by all CRB computation.
ComplexMatrix3 tensor_green(const std::array<double, 3>& r_vec, GreenVariant variant,
                            const PhysicalConfig& cfg);

/// Vector electric field of the Y-dipole at a surface point (z = 0 plane).
ComplexField3 vef(double x_r, double y_r, const TerminalPosition& p_t,
                  const PhysicalConfig& cfg);

/// Scalar field: Poynting-normal magnitude with the propagation phase attached.
cplx sef(double x_r, double y_r, const TerminalPosition& p_t, const PhysicalConfig& cfg);

/// Aggregated scalar field: area-normalized Riemann sum of the SEF over the
/// aperture grid with alpha cells (sqrt(alpha) odd).
cplx osef(const TerminalPosition& p_t, const SurfaceGeometry& geom, const PhysicalConfig& cfg,
          long alpha);

/// Nine partials d e_k / d(x_t, y_t, z_t); rows follow field components x,y,z,
/// columns the terminal coordinates. Scaled by E_in like the fields.
ComplexMatrix3 vef_gradient(double x_r, double y_r, const TerminalPosition& p_t,
                            const PhysicalConfig& cfg);

/// Partials of the SEF with respect to the terminal coordinates.
std::array<cplx, 3> sef_gradient(double x_r, double y_r, const TerminalPosition& p_t,
                                 const PhysicalConfig& cfg);

/// Quadratic-phase (Fresnel) approximation of the scalar Green function around
/// the terminal range, with direction-cosine cross terms retained.
cplx green_fresnel(double x_r, double y_r, const TerminalPosition& p_t,
                   const PhysicalConfig& cfg);

/// Linear-phase plane-wave approximation of the scalar Green function.
cplx green_planewave(double x_r, double y_r, const TerminalPosition& p_t,
                     const PhysicalConfig& cfg);

}  // namespace nearcrb
