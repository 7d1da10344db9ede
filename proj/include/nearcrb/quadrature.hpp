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

#include <complex>
#include <functional>
#include <vector>

#include "nearcrb/types.hpp"

namespace nearcrb {

struct RectDomain {
    double u_min, u_max, v_min, v_max;

    RectDomain(double u0, double u1, double v0, double v1)
        : u_min(u0), u_max(u1), v_min(v0), v_max(v1) {
        if (!(u_min < u_max && v_min < v_max))
            throw std::invalid_argument("degenerate integration domain");
    }
    static RectDomain centered_square(double half_side) {
        return RectDomain(-half_side, half_side, -half_side, half_side);
    }
    static RectDomain aperture(const SurfaceGeometry& geom) {
        return centered_square(geom.half_side());
    }
    double area() const { return (u_max - u_min) * (v_max - v_min); }
};

enum class QuadratureRule { TensorGauss, RiemannMidpoint };

/// Tensor Gauss-Legendre on a panel grid with local panel bisection until the
/// per-panel change falls under an area-proportional share of rel_tol. The
/// refinement path is a pure function of the inputs, so results are
/// reproducible across runs and thread counts.
struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::TensorGauss;
    int order = 32;         // Gauss points per axis (or cells per axis for Riemann)
    int panels = 4;         // initial panels per axis
    double rel_tol = 1e-10;
    int max_depth = 26;

    void validate() const {
        if (order < 2) throw std::invalid_argument("quadrature order must be >= 2");
        if (panels < 1) throw std::invalid_argument("panel count must be >= 1");
        if (!(rel_tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Integrate a real-valued integrand over a rectangle. Throws
/// std::runtime_error with the sample location if a non-finite value shows up.
IntegralResult integrate_2d(const std::function<double(double, double)>& f,
                            const RectDomain& dom, const QuadratureSpec& spec = {});

/// Complex convenience wrapper: real and imaginary parts integrated separately.
struct ComplexIntegralResult {
    std::complex<double> value;
    double error_estimate = 0.0;
};
ComplexIntegralResult integrate_2d_complex(
    const std::function<std::complex<double>(double, double)>& f, const RectDomain& dom,
    const QuadratureSpec& spec = {});

struct GridCell {
    double x, y, area;
};

/// Centered midpoint grid over a rectangle: n cells per axis, row-major order.
std::vector<GridCell> riemann_grid(const RectDomain& dom, int cells_per_axis);

/// The aperture grid with alpha cells in total; sqrt(alpha) must be a positive
/// odd integer so a center cell exists. Cell area is D^2/(2*alpha).
std::vector<GridCell> riemann_grid(const SurfaceGeometry& geom, long alpha);

/// sqrt(alpha) if alpha is a perfect odd square, throws otherwise.
int checked_odd_sqrt(long alpha);

/// Gauss-Legendre nodes and weights on [-1, 1] (cached per order).
const std::vector<double>& gauss_nodes(int order);
const std::vector<double>& gauss_weights(int order);

}  // namespace nearcrb
