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

#include "nearcrb/cpl.hpp"

#include <cmath>

namespace nearcrb {

namespace {
constexpr double kPi = std::numbers::pi;

double sq(double a) { return a * a; }

// Disk integrals of the vector-model phase integrands over radius-R disks,
// written in terms of s = R^2.
double disk_phase_x(double s) {
    return 3.0 * kPi / 8.0 * std::log(1.0 + s) - kPi * s * (5.0 * s + 6.0) / (16.0 * sq(s + 1.0));
}
double disk_phase_y(double s) {
    return kPi / 8.0 * std::log(1.0 + s) + kPi * s * (s - 2.0) / (16.0 * sq(s + 1.0));
}
}  // namespace

RectDomain cpl_domain(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    return RectDomain::centered_square(tau / std::sqrt(8.0));
}

double cpl_information_integrand(FieldModel model, int part, int axis, double u, double v) {
    const double u2 = u * u, v2 = v * v;
    const double w = u2 + v2 + 1.0;
    if (model == FieldModel::Vef) {
        if (part == 0) {
            const double w3 = w * w * w;
            if (axis == 0) return u2 * (u2 + 1.0) / w3;
            if (axis == 1) return v2 * (u2 + 1.0) / w3;
            return (u2 + 1.0) / w3;
        }
        const double w4 = sq(sq(w));
        if (axis == 0) return (u2 * u2 + v2 * v2 + u2 + v2 - u2 * v2) / w4;
        if (axis == 1) return (u2 + 1.0) * (u2 + 4.0 * v2 + 1.0) / w4;
        return (v2 * v2 + u2 * v2 + 1.0) / w4;
    }
    if (model == FieldModel::Sef) {
        if (part == 0) {
            const double w72 = std::pow(w, 3.5);
            if (axis == 0) return u2 * (u2 + 1.0) / w72;
            if (axis == 1) return v2 * (u2 + 1.0) / w72;
            return (u2 + 1.0) / w72;
        }
        const double w92 = std::pow(w, 4.5);
        if (axis == 0) return u2 * sq(3.0 * u2 - 2.0 * v2 + 3.0) / (4.0 * (u2 + 1.0) * w92);
        if (axis == 1) return 25.0 * v2 * (u2 + 1.0) / (4.0 * w92);
        return sq(u2 * u2 + u2 * v2 + 3.0 * v2 - u2 - 2.0) / (4.0 * (u2 + 1.0) * w92);
    }
    throw std::invalid_argument("no normalized integrands for the aggregated model");
}

RhoCplTable rho_numeric(double tau, FieldModel model, const QuadratureSpec& spec) {
    if (model == FieldModel::Osef)
        throw std::invalid_argument("aggregated model has no normalized integral table");
    const RectDomain dom = cpl_domain(tau);
    RhoCplTable t;
    t.model = model;
    t.tau = tau;
    for (int axis = 0; axis < 3; ++axis) {
        t.phase[axis].numeric =
            integrate_2d([&](double u, double v) { return cpl_information_integrand(model, 0, axis, u, v); },
                         dom, spec)
                .value;
        t.amp[axis].numeric =
            integrate_2d([&](double u, double v) { return cpl_information_integrand(model, 1, axis, u, v); },
                         dom, spec)
                .value;
    }
    return t;
}

ClosedForms rho_closed_form(double tau, const QuadratureSpec& spec) {
    const double t = tau, t2 = tau * tau;
    const double ftan = std::atan(t / std::sqrt(t2 + 8.0));
    const double s8 = std::sqrt(t2 + 8.0);

    ClosedForms cf;
    cf.amp_x.value = 1.0 / (t2 + 8.0) *
                     (ftan / (2.0 * s8) - t2 * (3.0 * t2 + 16.0) / sq(t2 + 4.0));
    cf.amp_y.value = (9.0 * t2 * t2 + 152.0 * t2 + 544.0) * t * ftan /
                         (2.0 * std::pow(t2 + 8.0, 2.5)) +
                     t2 * (3.0 * t2 * t2 + 8.0 * t2 - 32.0) / (sq(t2 + 8.0) * sq(t2 + 4.0));
    cf.phase_z.value =
        t / (t2 + 8.0) * ((3.0 * t2 + 28.0) / s8 * ftan + 2.0 * t / (t2 + 4.0));
    cf.amp_z.value = 2.0 * t / sq(t2 + 8.0) *
                     ((t2 * t2 + 16.0 * t2 + 88.0) / s8 * ftan +
                      16.0 * t * (t2 + 5.0) / sq(t2 + 4.0));

    const auto table = rho_numeric(tau, FieldModel::Vef, spec);
    cf.amp_x.numeric = table.amp[0].numeric;
    cf.amp_y.numeric = table.amp[1].numeric;
    cf.phase_z.numeric = table.phase[2].numeric;
    cf.amp_z.numeric = table.amp[2].numeric;
    for (auto* e : {&cf.amp_x, &cf.amp_y, &cf.phase_z, &cf.amp_z}) {
        const double denom = std::max(std::abs(e->numeric), 1e-300);
        e->mismatch = std::abs(e->value - e->numeric) > 1e-6 * denom;
    }
    return cf;
}

RhoBounds rho_bounds(double tau, FieldModel model) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    RhoBounds b;
    b.model = model;
    b.tau = tau;
    const double t2 = tau * tau;
    const double si = t2 / 8.0;  // inscribed disk, R = tau/sqrt(8)
    const double sc = t2 / 4.0;  // circumscribed disk, R = tau/2

    if (model == FieldModel::Vef) {
        b.phase[0] = BoundPair{disk_phase_x(si), disk_phase_x(sc)};
        b.phase[1] = BoundPair{disk_phase_y(si), disk_phase_y(sc)};
        return b;
    }
    if (model != FieldModel::Sef)
        throw std::invalid_argument("bounds exist for the pointwise models only");

    const double p4 = t2 + 4.0, p8 = t2 + 8.0;
    const double t4 = t2 * t2;
    const double r2 = std::sqrt(2.0);
    b.phase[0] = BoundPair{
        8.0 * kPi / 15.0 - r2 * kPi * (45.0 * t4 + 640.0 * t2 + 2048.0) / (30.0 * std::pow(p8, 2.5)),
        8.0 * kPi / 15.0 - kPi * (45.0 * t4 + 320.0 * t2 + 512.0) / (30.0 * std::pow(p4, 2.5))};
    b.amp[0] = BoundPair{
        3.0 * kPi / 14.0 - kPi *
                               (63.0 * r2 * t4 - 224.0 * std::pow(p8, 1.5) +
                                64.0 * r2 * (21.0 * t2 + 80.0)) /
                               (7.0 * std::pow(p8, 3.5)),
        3.0 * kPi / 14.0 - kPi *
                               (63.0 * t4 - 112.0 * std::pow(p4, 1.5) + 32.0 * (21.0 * t2 + 40.0)) /
                               (14.0 * std::pow(p4, 3.5))};
    b.phase[1] = BoundPair{
        4.0 * kPi / 15.0 - r2 * kPi * (15.0 * t4 + 320.0 * t2 + 1024.0) / (30.0 * std::pow(p8, 2.5)),
        4.0 * kPi / 15.0 - kPi * (15.0 * t4 + 160.0 * t2 + 256.0) / (30.0 * std::pow(p4, 2.5))};
    b.amp[1] = BoundPair{
        10.0 * kPi / 21.0 -
            5.0 * r2 * kPi * (35.0 * t4 + 896.0 * t2 + 2048.0) / (21.0 * std::pow(p8, 3.5)),
        10.0 * kPi / 21.0 -
            5.0 * kPi * (35.0 * t4 + 448.0 * t2 + 512.0) / (42.0 * std::pow(p4, 3.5))};
    b.phase[2] = BoundPair{
        8.0 * kPi / 15.0 - 16.0 * r2 * kPi * (5.0 * t2 + 64.0) / (15.0 * std::pow(p8, 2.5)),
        8.0 * kPi / 15.0 - 8.0 * kPi * (5.0 * t2 + 32.0) / (15.0 * std::pow(p4, 2.5))};
    b.amp[2] = BoundPair{
        13.0 * kPi / 42.0 - kPi *
                                (7.0 * r2 * t4 * (3.0 * t2 + 64.0) +
                                 1344.0 * std::pow(p8, 1.5) - 512.0 * r2 * (7.0 * t2 + 16.0)) /
                                (42.0 * std::pow(p8, 3.5)),
        13.0 * kPi / 42.0 - kPi *
                                (7.0 * t4 * (3.0 * t2 + 32.0) + 336.0 * std::pow(p4, 1.5) -
                                 128.0 * (7.0 * t2 + 8.0)) /
                                (42.0 * std::pow(p4, 3.5))};
    return b;
}

RhoCplTable rho_full(double tau, FieldModel model, const QuadratureSpec& spec) {
    RhoCplTable t = rho_numeric(tau, model, spec);
    if (model == FieldModel::Vef) {
        const auto cf = rho_closed_form(tau, spec);
        t.amp[0].closed_form = cf.amp_x.value;
        t.amp[0].closed_form_mismatch = cf.amp_x.mismatch;
        t.amp[1].closed_form = cf.amp_y.value;
        t.amp[1].closed_form_mismatch = cf.amp_y.mismatch;
        t.phase[2].closed_form = cf.phase_z.value;
        t.phase[2].closed_form_mismatch = cf.phase_z.mismatch;
        t.amp[2].closed_form = cf.amp_z.value;
        t.amp[2].closed_form_mismatch = cf.amp_z.mismatch;
    }
    const auto b = rho_bounds(tau, model);
    for (int axis = 0; axis < 3; ++axis) {
        if (b.phase[axis])
            t.phase[axis].bounds = std::pair{b.phase[axis]->lower, b.phase[axis]->upper};
        if (b.amp[axis]) t.amp[axis].bounds = std::pair{b.amp[axis]->lower, b.amp[axis]->upper};
    }
    return t;
}

CrbResult crb_cpl(const CplScenario& sc, const Numerics& num) {
    CrbResult out;
    out.model = sc.model;
    out.path = CrbPath::PerComponent;

    if (sc.model == FieldModel::Osef) {
        const double k0 = sc.cfg.wave_number();
        const double d_r = sc.diagonal();
        const double z = sc.z_t;
        const auto grid = riemann_grid(SurfaceGeometry(d_r), num.riemann_alpha);
        // x and y information cancels pairwise over the symmetric grid; only
        // the range information survives.
        cplx acc = 0.0;
        for (const auto& c : grid) {
            const double r = std::sqrt(c.x * c.x + c.y * c.y + z * z);
            const double rm52 = std::pow(r, -2.5);
            const double rm72 = rm52 / r;
            const double rm92 = rm72 / r;
            const double fxz = c.x * c.x + z * z;
            const cplx der = (3.0 * z * z + c.x * c.x) / (2.0 * z * fxz) * rm52 -
                             cplx{0.0, 1.0} * k0 * z * rm72 - 2.5 * z * rm92;
            acc += std::sqrt(z * fxz) * der * std::exp(cplx{0.0, -k0 * r});
        }
        const double alpha = static_cast<double>(num.riemann_alpha);
        out.z = (alpha * alpha / (d_r * d_r)) / (sc.cfg.snr * std::norm(acc));
        out.rank_deficient = true;
        return out;
    }

    const auto t = rho_numeric(sc.tau, sc.model, num.quad);
    const double k2 = sq(sc.cfg.wave_number());
    const double invz2 = 1.0 / sq(sc.z_t);
    out.x = 1.0 / (sc.cfg.snr * 2.0 * (k2 * t.phase[0].numeric + invz2 * t.amp[0].numeric));
    out.y = 1.0 / (sc.cfg.snr * 2.0 * (k2 * t.phase[1].numeric + invz2 * t.amp[1].numeric));
    out.z = 1.0 / (sc.cfg.snr * 2.0 * (k2 * t.phase[2].numeric + invz2 * t.amp[2].numeric));
    return out;
}

CrbResult crb_cpl_large_zt(const CplScenario& sc, const Numerics& num) {
    if (sc.model == FieldModel::Osef)
        throw std::invalid_argument("the simplification covers the pointwise models only");
    const auto t = rho_numeric(sc.tau, sc.model, num.quad);
    const double k2 = sq(sc.cfg.wave_number());
    CrbResult out;
    out.model = sc.model;
    out.path = CrbPath::PerComponent;
    out.x = 1.0 / (sc.cfg.snr * 2.0 * k2 * t.phase[0].numeric);
    out.y = 1.0 / (sc.cfg.snr * 2.0 * k2 * t.phase[1].numeric);
    out.z = 1.0 / (sc.cfg.snr * 2.0 * k2 * t.phase[2].numeric);
    return out;
}

CrbResult crb_asymptotic(double wavelength, double snr, double tau, FieldModel model) {
    if (!(wavelength > 0.0 && snr > 0.0 && tau > 1.0))
        throw std::invalid_argument("asymptotic regime needs positive inputs and tau > 1");
    const double l2 = wavelength * wavelength;
    const double pi3 = kPi * kPi * kPi;
    CrbResult out;
    out.model = model;
    out.path = CrbPath::PerComponent;
    if (model == FieldModel::Vef) {
        out.x = l2 / (snr * 6.0 * pi3 * std::log(tau));
        out.y = l2 / (snr * 2.0 * pi3 * std::log(tau));
        out.z = l2 / (snr * 6.0 * pi3);
        return out;
    }
    if (model == FieldModel::Sef) {
        out.x = 15.0 / 64.0 * l2 / (snr * pi3);
        out.y = 15.0 / 32.0 * l2 / (snr * pi3);
        out.z = out.x;
        return out;
    }
    throw std::invalid_argument("no asymptotic limit for the aggregated model");
}

double asymptotic_gap_coefficient(int axis) {
    const double pi3 = kPi * kPi * kPi;
    if (axis == 0) return 15.0 / (64.0 * pi3);
    if (axis == 1) return 15.0 / (32.0 * pi3);
    if (axis == 2) return 13.0 / (192.0 * pi3);
    throw std::invalid_argument("axis must be 0, 1, or 2");
}

}  // namespace nearcrb
