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

#include "nearcrb/types.hpp"

namespace nearcrb {

LocalSpherical to_local_spherical(double x_r, double y_r, const TerminalPosition& p_t) {
    const double dx = x_r - p_t.x;
    const double dy = y_r - p_t.y;
    const double dz = p_t.z;  // surface point sits in z = 0
    const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (!(r > 0.0)) throw std::domain_error("coincident surface point and terminal");

    const double rho = std::sqrt(dx * dx + dz * dz);  // distance off the dipole axis
    LocalSpherical s;
    s.r_rt = r;
    s.cos_theta = dy / r;
    s.sin_theta = rho / r;
    if (rho > 0.0) {
        s.cos_phi = dx / rho;
        s.sin_phi = dz / rho;
    } else {
        s.cos_phi = 1.0;
        s.sin_phi = 0.0;
    }
    return s;
}

}  // namespace nearcrb
