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

#include <vector>

#include "nearcrb/cpl.hpp"

namespace nearcrb {

/// Distributed receiver: n_s^2 equal square antennas of total area D_r^2/2,
/// spread over an R_r/sqrt(2) x R_r/sqrt(2) region, mirror symmetric about
/// both axes. The terminal sits on the boresight line.
struct SimoLayout {
    int n_s = 1;       // antennas per axis; 1 degenerates to the single surface
    double r_r = 0.0;  // deployment-region scale (m)
    double d_r = 0.0;  // total-aperture diagonal (m)
    double z_t = 0.0;  // terminal depth (m)
    bool overlapping = false;           // antennas overlap when d_r > r_r
    std::vector<RectDomain> quadrant;   // raw sub-domains, first quadrant only
    std::vector<RectDomain> quadrant_normalized;  // same, divided by z_t

    double antenna_side() const { return d_r / (n_s * std::sqrt(2.0)); }
    double total_area() const { return d_r * d_r / 2.0; }
};

SimoLayout build_layout(int n_s, double r_r, double d_r, double z_t);

/// CRBs of the distributed system for a boresight terminal. Pointwise models
/// integrate the normalized information integrands over one quadrant's
/// sub-domains (mirror symmetry supplies the factor of four); the aggregated
/// model runs one Riemann grid per antenna.
CrbResult crb_simo(const SimoLayout& layout, const PhysicalConfig& cfg, FieldModel model,
                   const Numerics& num = {});

/// Large-distance simplification (phase term only).
CrbResult crb_simo_large_zt(const SimoLayout& layout, const PhysicalConfig& cfg,
                            FieldModel model, const Numerics& num = {});

/// Symmetry diagnostics: per-antenna information over the full layout.
struct Lemma1Report {
    double max_offdiag_ratio = 0.0;   // off-diagonal / smallest diagonal, full layout
    double max_partner_deviation = 0.0;  // 90-degree rotation partners, x<->y relabeled
    double broken_offdiag_ratio = 0.0;   // negative control: one antenna removed
};
Lemma1Report lemma1_check(const SimoLayout& layout, const PhysicalConfig& cfg,
                          FieldModel model, const QuadratureSpec& spec = {});

/// Full-layout FIM summed antenna by antenna (all n_s^2, no symmetry
/// shortcut). Used by the diagnostics and as an independent path in tests.
FimMatrix simo_full_fim(const SimoLayout& layout, const PhysicalConfig& cfg, FieldModel model,
                        const QuadratureSpec& spec = {}, int skip_antenna = -1);

}  // namespace nearcrb
