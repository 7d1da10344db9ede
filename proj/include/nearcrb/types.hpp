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

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace nearcrb {

inline constexpr double free_space_impedance_ohm = 376.730;

/// Wavelength, intrinsic impedance, and the linear SNR |E_in|^2/sigma^2.
/// The dipole drive (current, length) is optional; when present it fixes the
/// initial field intensity E_in = eta*I*l/(2*lambda) in volts, otherwise field
/// evaluations use a unit E_in. CRBs depend on the SNR only.
struct PhysicalConfig {
    double wavelength = 0.01;                    // m
    double intrinsic_impedance = free_space_impedance_ohm;  // ohm
    double snr = 10.0;                           // linear |E_in|^2/sigma^2
    std::optional<double> dipole_current;        // A
    std::optional<double> dipole_length;         // m

    PhysicalConfig() = default;
    PhysicalConfig(double lambda_m, double snr_linear,
                   double eta_ohm = free_space_impedance_ohm)
        : wavelength(lambda_m), intrinsic_impedance(eta_ohm), snr(snr_linear) {
        validate();
    }

    void validate() const {
        if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
        if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
        if (!(intrinsic_impedance > 0.0)) throw std::invalid_argument("impedance must be positive");
        if (dipole_current.has_value() != dipole_length.has_value())
            throw std::invalid_argument("dipole current and length must be given together");
        if (dipole_current && !(*dipole_current > 0.0 && *dipole_length > 0.0))
            throw std::invalid_argument("dipole drive must be positive");
    }

    double wave_number() const { return 2.0 * std::numbers::pi / wavelength; }

    /// E_in in volts; 1 V when no dipole drive is configured.
    double e_in() const {
        if (dipole_current)
            return intrinsic_impedance * (*dipole_current) * (*dipole_length) / (2.0 * wavelength);
        return 1.0;
    }
};

inline double snr_db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double snr_linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Terminal location in front of the receiving surface (z > 0).
struct TerminalPosition {
    double x = 0.0, y = 0.0, z = 1.0;  // m

    TerminalPosition() = default;
    TerminalPosition(double xt, double yt, double zt) : x(xt), y(yt), z(zt) {
        if (!(z > 0.0)) throw std::invalid_argument("terminal must satisfy z > 0");
    }
    static TerminalPosition cpl(double zt) { return TerminalPosition(0.0, 0.0, zt); }

    bool on_cpl() const { return x == 0.0 && y == 0.0; }
    double range() const { return std::sqrt(x * x + y * y + z * z); }
    double zenith() const { return std::acos(z / range()); }
    double azimuth() const {
        double a = std::atan2(y, x);
        return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
    }
    /// Direction cosines (sin(zen)cos(az), sin(zen)sin(az), cos(zen)).
    void direction_cosines(double& cx, double& cy, double& cz) const {
        const double r = range();
        cx = x / r;
        cy = y / r;
        cz = z / r;
    }
};

/// Square receiving aperture centered at the origin in the z = 0 plane,
/// parameterized by its diagonal length. Points satisfy |x|,|y| <= D/sqrt(8).
struct SurfaceGeometry {
    double diagonal = 1.0;  // m

    SurfaceGeometry() = default;
    explicit SurfaceGeometry(double d_r) : diagonal(d_r) {
        if (!(d_r > 0.0)) throw std::invalid_argument("surface diagonal must be positive");
    }
    double half_side() const { return diagonal / std::sqrt(8.0); }
    double area() const { return diagonal * diagonal / 2.0; }
};

enum class FieldModel { Vef, Sef, Osef };

enum class Regime { Reactive, RadiativeNear, Far };

/// Fresnel and Fraunhofer distances of an aperture at a given wavelength.
struct RegimeDistances {
    double fresnel = 0.0;     // 0.5*sqrt(D^3/lambda)
    double fraunhofer = 0.0;  // 2*D^2/lambda

    RegimeDistances(const SurfaceGeometry& geom, const PhysicalConfig& cfg) {
        const double d = geom.diagonal, lam = cfg.wavelength;
        fresnel = 0.5 * std::sqrt(d * d * d / lam);
        fraunhofer = 2.0 * d * d / lam;
        if (d > lam / 2.0 && !(fresnel < fraunhofer))
            throw std::logic_error("fresnel distance must precede fraunhofer for D > lambda/2");
    }
};

/// Half-open boundaries: far field at r >= fraunhofer, reactive below fresnel.
/// Informational only; nothing downstream rejects reactive-region inputs.
inline Regime regime_classify(double r_to, const SurfaceGeometry& geom,
                              const PhysicalConfig& cfg) {
    if (!(r_to > 0.0)) throw std::domain_error("range must be positive");
    const RegimeDistances d(geom, cfg);
    if (r_to >= d.fraunhofer) return Regime::Far;
    if (r_to < d.fresnel) return Regime::Reactive;
    return Regime::RadiativeNear;
}

/// Local spherical factors of a surface point seen from the terminal, with the
/// polar axis along the dipole (+Y). cos(theta) = (y_r - y_t)/r_rt and
/// tan(phi) = z_t/(x_r - x_t).
struct LocalSpherical {
    double r_rt;
    double sin_theta, cos_theta;
    double sin_phi, cos_phi;
};

LocalSpherical to_local_spherical(double x_r, double y_r, const TerminalPosition& p_t);

}  // namespace nearcrb
