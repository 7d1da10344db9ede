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

#include <optional>

#include "nearcrb/fim.hpp"

namespace nearcrb {

/// Boresight geometry expressed through tau = D_r / z_t.
struct CplScenario {
    double tau;
    double z_t;
    PhysicalConfig cfg;
    FieldModel model = FieldModel::Vef;

    CplScenario(double tau_, double z_t_, PhysicalConfig cfg_,
                FieldModel model_ = FieldModel::Vef)
        : tau(tau_), z_t(z_t_), cfg(std::move(cfg_)), model(model_) {
        if (!(tau > 0.0 && z_t > 0.0)) throw std::invalid_argument("tau and z_t must be positive");
    }
    double diagonal() const { return tau * z_t; }
};

/// Dimensionless information integrands on the normalized aperture, for a
/// boresight terminal. part 0 carries the k0^2 weight (propagation phase),
/// part 1 the z^-2 weight (amplitude pattern). axis: 0=x, 1=y, 2=z.
double cpl_information_integrand(FieldModel model, int part, int axis, double u, double v);

/// Normalized integration square {|u|,|v| <= tau/sqrt(8)}.
RectDomain cpl_domain(double tau);

struct RhoValue {
    double numeric = 0.0;
    std::optional<double> closed_form;
    bool closed_form_mismatch = false;
    std::optional<std::pair<double, double>> bounds;  // (lower, upper)
};

/// Six dimensionless information integral values for one field model.
struct RhoCplTable {
    FieldModel model;
    double tau;
    std::array<RhoValue, 3> phase;  // multiplies k0^2
    std::array<RhoValue, 3> amp;    // multiplies z_t^-2
};

/// Quadrature evaluation of the six integrals (the ground truth the closed
/// forms and bounds are judged against).
RhoCplTable rho_numeric(double tau, FieldModel model, const QuadratureSpec& spec = {});

struct ClosedFormEntry {
    double value = 0.0;    // printed formula
    double numeric = 0.0;  // quadrature reference
    bool mismatch = false; // disagreement beyond 1e-6 relative
};

/// Closed forms exist for amp_x, amp_y, phase_z, amp_z of the vector model.
/// The amp_x formula is known to disagree with its own integral (it goes
/// negative where the integrand is non-negative); it is evaluated and flagged,
/// and quadrature stays authoritative.
struct ClosedForms {
    ClosedFormEntry amp_x, amp_y, phase_z, amp_z;
};
ClosedForms rho_closed_form(double tau, const QuadratureSpec& spec = {});

struct BoundPair {
    double lower, upper;
};

/// Inscribed/circumscribed-disk bounds: phase_x and phase_y for the vector
/// model; all six integrals for the scalar model.
struct RhoBounds {
    FieldModel model;
    double tau;
    std::array<std::optional<BoundPair>, 3> phase;
    std::array<std::optional<BoundPair>, 3> amp;
};
RhoBounds rho_bounds(double tau, FieldModel model);

/// Attach closed forms and bounds to a numeric table.
RhoCplTable rho_full(double tau, FieldModel model, const QuadratureSpec& spec = {});

/// Boresight CRBs: diagonal information, per-component inverses. The
/// aggregated model needs the grid resolution alpha and reports x, y as
/// non-identifiable by construction (odd sums over the symmetric grid vanish).
CrbResult crb_cpl(const CplScenario& sc, const Numerics& num = {});

/// Large-distance simplification that drops the amplitude term. Valid for
/// z_t >= 100*lambda; see large_zt_regime_ok.
CrbResult crb_cpl_large_zt(const CplScenario& sc, const Numerics& num = {});
inline bool large_zt_regime_ok(const CplScenario& sc) {
    return sc.z_t >= 100.0 * sc.cfg.wavelength;
}

/// Limits of the boresight CRBs as tau grows. The vector-model x and y bounds
/// keep a ln(tau) dependence; everything else is a pure constant.
CrbResult crb_asymptotic(double wavelength, double snr, double tau, FieldModel model);

/// Constant gap CRB2 - CRB1 in the limit, per unit SNR^-1 * lambda^2.
double asymptotic_gap_coefficient(int axis);

}  // namespace nearcrb
