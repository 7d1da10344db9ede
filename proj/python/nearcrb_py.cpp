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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nearcrb/scenario.hpp"

namespace py = pybind11;
using namespace nearcrb;

namespace {

py::dict crb_dict(const CrbResult& r) {
    py::dict d;
    d["crb_m2"] = py::make_tuple(r.x, r.y, r.z);
    d["rcrb_cm"] = py::make_tuple(r.rcrb_cm(0), r.rcrb_cm(1), r.rcrb_cm(2));
    d["identifiable"] = py::make_tuple(r.identifiable(0), r.identifiable(1), r.identifiable(2));
    d["model"] = model_name(r.model);
    d["rank_deficient"] = r.rank_deficient;
    return d;
}

py::list fim_list(const FimMatrix& f) {
    py::list rows;
    for (int i = 0; i < 3; ++i) {
        py::list row;
        for (int j = 0; j < 3; ++j) row.append(f(i, j));
        rows.append(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_nearcrb, m) {
    m.doc() = "Cramér-Rao bounds for near-field terminal positioning";

    py::enum_<FieldModel>(m, "FieldModel")
        .value("VEF", FieldModel::Vef)
        .value("SEF", FieldModel::Sef)
        .value("OSEF", FieldModel::Osef);

    py::class_<PhysicalConfig>(m, "PhysicalConfig")
        .def(py::init<double, double, double>(), py::arg("wavelength_m"), py::arg("snr"),
             py::arg("eta_ohm") = free_space_impedance_ohm)
        .def_readonly("wavelength", &PhysicalConfig::wavelength)
        .def_readonly("snr", &PhysicalConfig::snr)
        .def_property_readonly("wave_number", &PhysicalConfig::wave_number)
        .def_property_readonly("e_in", &PhysicalConfig::e_in);

    py::class_<TerminalPosition>(m, "TerminalPosition")
        .def(py::init<double, double, double>(), py::arg("x_m"), py::arg("y_m"), py::arg("z_m"))
        .def_static("cpl", &TerminalPosition::cpl, py::arg("z_m"))
        .def_readonly("x", &TerminalPosition::x)
        .def_readonly("y", &TerminalPosition::y)
        .def_readonly("z", &TerminalPosition::z)
        .def_property_readonly("range", &TerminalPosition::range);

    py::class_<SurfaceGeometry>(m, "SurfaceGeometry")
        .def(py::init<double>(), py::arg("diagonal_m"))
        .def_readonly("diagonal", &SurfaceGeometry::diagonal)
        .def_property_readonly("area", &SurfaceGeometry::area);

    m.def("snr_db_to_linear", &snr_db_to_linear);
    m.def("snr_linear_to_db", &snr_linear_to_db);

    m.def(
        "scalar_green",
        [](double r, const PhysicalConfig& cfg) { return scalar_green(r, cfg); },
        py::arg("r_m"), py::arg("cfg"));
    m.def(
        "vef",
        [](double xr, double yr, const TerminalPosition& p, const PhysicalConfig& cfg) {
            const auto e = nearcrb::vef(xr, yr, p, cfg);
            return py::make_tuple(e.x, e.y, e.z);
        },
        py::arg("x_r"), py::arg("y_r"), py::arg("terminal"), py::arg("cfg"));
    m.def(
        "sef",
        [](double xr, double yr, const TerminalPosition& p, const PhysicalConfig& cfg) {
            return nearcrb::sef(xr, yr, p, cfg);
        },
        py::arg("x_r"), py::arg("y_r"), py::arg("terminal"), py::arg("cfg"));
    m.def(
        "osef",
        [](const TerminalPosition& p, const SurfaceGeometry& g, const PhysicalConfig& cfg,
           long alpha) { return nearcrb::osef(p, g, cfg, alpha); },
        py::arg("terminal"), py::arg("surface"), py::arg("cfg"), py::arg("alpha") = 201L * 201L);

    m.def(
        "fim",
        [](const TerminalPosition& p, const SurfaceGeometry& g, const PhysicalConfig& cfg,
           FieldModel model, long alpha) {
            if (model == FieldModel::Osef) return fim_list(fim_osef(p, g, cfg, alpha));
            return fim_list(model == FieldModel::Vef ? fim_vef(p, g, cfg)
                                                     : fim_sef(p, g, cfg));
        },
        py::arg("terminal"), py::arg("surface"), py::arg("cfg"), py::arg("model"),
        py::arg("alpha") = 201L * 201L);

    m.def(
        "crb_point",
        [](const TerminalPosition& p, const SurfaceGeometry& g, const PhysicalConfig& cfg,
           FieldModel model) { return crb_dict(crb_point(p, g, cfg, model)); },
        py::arg("terminal"), py::arg("surface"), py::arg("cfg"), py::arg("model"));

    m.def(
        "crb_cpl",
        [](double tau, double z_t, const PhysicalConfig& cfg, FieldModel model, long alpha) {
            Numerics num;
            num.riemann_alpha = alpha;
            return crb_dict(crb_cpl(CplScenario(tau, z_t, cfg, model), num));
        },
        py::arg("tau"), py::arg("z_t"), py::arg("cfg"), py::arg("model"),
        py::arg("alpha") = 201L * 201L);

    m.def(
        "crb_asymptotic",
        [](double lam, double snr, double tau, FieldModel model) {
            return crb_dict(crb_asymptotic(lam, snr, tau, model));
        },
        py::arg("wavelength_m"), py::arg("snr"), py::arg("tau"), py::arg("model"));

    m.def(
        "rho_table",
        [](double tau, FieldModel model) {
            const auto t = rho_full(tau, model);
            py::dict d;
            const char* axes = "xyz";
            for (int a = 0; a < 3; ++a) {
                py::dict pa, am;
                pa["numeric"] = t.phase[a].numeric;
                am["numeric"] = t.amp[a].numeric;
                if (t.phase[a].closed_form) pa["closed_form"] = *t.phase[a].closed_form;
                if (t.amp[a].closed_form) am["closed_form"] = *t.amp[a].closed_form;
                pa["closed_form_mismatch"] = t.phase[a].closed_form_mismatch;
                am["closed_form_mismatch"] = t.amp[a].closed_form_mismatch;
                if (t.phase[a].bounds)
                    pa["bounds"] = py::make_tuple(t.phase[a].bounds->first, t.phase[a].bounds->second);
                if (t.amp[a].bounds)
                    am["bounds"] = py::make_tuple(t.amp[a].bounds->first, t.amp[a].bounds->second);
                d[(std::string("phase_") + axes[a]).c_str()] = pa;
                d[(std::string("amp_") + axes[a]).c_str()] = am;
            }
            return d;
        },
        py::arg("tau"), py::arg("model"));

    m.def(
        "crb_simo",
        [](int n_s, double r_r, double d_r, double z_t, const PhysicalConfig& cfg,
           FieldModel model, long alpha) {
            Numerics num;
            num.riemann_alpha = alpha;
            return crb_dict(crb_simo(build_layout(n_s, r_r, d_r, z_t), cfg, model, num));
        },
        py::arg("n_s"), py::arg("r_r"), py::arg("d_r"), py::arg("z_t"), py::arg("cfg"),
        py::arg("model"), py::arg("alpha") = 41L * 41L);

    m.def("run_validation", [] {
        const auto rep = run_validation();
        py::list groups;
        for (const auto& g : rep.groups) {
            py::dict d;
            d["name"] = g.name;
            d["deviation"] = g.deviation;
            d["threshold"] = g.threshold;
            d["pass"] = g.pass;
            groups.append(std::move(d));
        }
        py::dict out;
        out["pass"] = rep.pass;
        out["groups"] = groups;
        return out;
    });
}
