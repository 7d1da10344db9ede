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

#include "nearcrb/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace nearcrb {

using nlohmann::json;

std::string model_name(FieldModel m) {
    switch (m) {
        case FieldModel::Vef: return "vef";
        case FieldModel::Sef: return "sef";
        case FieldModel::Osef: return "osef";
    }
    return "?";
}

FieldModel model_from_name(const std::string& name) {
    if (name == "vef") return FieldModel::Vef;
    if (name == "sef") return FieldModel::Sef;
    if (name == "osef") return FieldModel::Osef;
    throw ConfigError("unknown field model: " + name);
}

std::string format_float(double v) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("missing or non-numeric field: ") + key);
    return j[key].get<double>();
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::Reactive: return "reactive";
        case Regime::RadiativeNear: return "radiative-near";
        case Regime::Far: return "far";
    }
    return "?";
}

json crb_json(const CrbResult& r) {
    json out;
    out["model"] = model_name(r.model);
    out["crb_m2"] = {r.x, r.y, r.z};
    out["rcrb_cm"] = {r.rcrb_cm(0), r.rcrb_cm(1), r.rcrb_cm(2)};
    out["identifiable"] = {r.identifiable(0), r.identifiable(1), r.identifiable(2)};
    out["path"] = r.path == CrbPath::FullInversion ? "full-inversion" : "per-component";
    out["rank_deficient"] = r.rank_deficient;
    return out;
}

template <typename Fn>
void parallel_for(int n, int threads, Fn fn) {
    threads = std::max(1, threads);
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mtx;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mtx);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

ScenarioConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    ScenarioConfig cfg;
    try {
        const auto& phys = j.at("physical");
        cfg.physical.wavelength = require_number(phys, "wavelength_m");
        if (phys.contains("snr") == phys.contains("snr_db"))
            throw ConfigError("exactly one of physical.snr / physical.snr_db is required");
        cfg.physical.snr = phys.contains("snr") ? require_number(phys, "snr")
                                                : snr_db_to_linear(require_number(phys, "snr_db"));
        if (phys.contains("eta_ohm")) cfg.physical.intrinsic_impedance = require_number(phys, "eta_ohm");
        if (phys.contains("dipole_current_a")) {
            cfg.physical.dipole_current = require_number(phys, "dipole_current_a");
            cfg.physical.dipole_length = require_number(phys, "dipole_length_m");
        }
        cfg.physical.validate();

        cfg.surface = SurfaceGeometry(require_number(j.at("surface"), "d_r_m"));

        const auto& term = j.at("terminal");
        const bool cpl = term.value("cpl", false);
        if (cpl) {
            if (term.contains("x_m") || term.contains("y_m"))
                throw ConfigError("terminal: cpl excludes explicit x_m/y_m");
            cfg.terminal = TerminalPosition::cpl(require_number(term, "z_m"));
            cfg.terminal_cpl = true;
        } else {
            cfg.terminal = TerminalPosition(require_number(term, "x_m"), require_number(term, "y_m"),
                                            require_number(term, "z_m"));
            cfg.terminal_cpl = cfg.terminal.on_cpl();
        }

        if (j.contains("field_model"))
            cfg.models = {model_from_name(j["field_model"].get<std::string>())};
        else
            cfg.models = {FieldModel::Vef};

        if (j.contains("numerics")) {
            const auto& num = j["numerics"];
            if (num.contains("quad_order")) cfg.numerics.quad.order = num["quad_order"].get<int>();
            if (num.contains("panels")) cfg.numerics.quad.panels = num["panels"].get<int>();
            if (num.contains("tol")) cfg.numerics.quad.rel_tol = num["tol"].get<double>();
            if (num.contains("riemann_alpha"))
                cfg.numerics.riemann_alpha = num["riemann_alpha"].get<long>();
            cfg.numerics.quad.validate();
            checked_odd_sqrt(cfg.numerics.riemann_alpha);
        }

        if (j.contains("simo") && j["simo"].value("enabled", true)) {
            SimoSettings s;
            s.n_s = j["simo"].value("n_s", 2);
            s.r_r = require_number(j["simo"], "r_r_m");
            if (s.n_s != 1 && (s.n_s < 2 || s.n_s % 2 != 0))
                throw ConfigError("simo.n_s must be 1 or an even integer");
            cfg.simo = s;
        }

        if (j.contains("sweep")) {
            const auto& sw = j["sweep"];
            SweepSpec spec;
            spec.parameter = sw.at("parameter").get<std::string>();
            if (spec.parameter != "d_r" && spec.parameter != "z_t" && spec.parameter != "lambda" &&
                spec.parameter != "snr_db" && spec.parameter != "n_s")
                throw ConfigError("sweep.parameter must be one of d_r, z_t, lambda, snr_db, n_s");
            spec.from = require_number(sw, "from");
            spec.to = require_number(sw, "to");
            spec.points = sw.value("points", 2);
            const std::string scale = sw.value("scale", "linear");
            if (scale != "linear" && scale != "log") throw ConfigError("sweep.scale: linear or log");
            spec.log_scale = scale == "log";
            if (!(spec.from < spec.to) || spec.points < 2)
                throw ConfigError("sweep needs from < to and points >= 2");
            if (spec.log_scale && !(spec.from > 0.0))
                throw ConfigError("log sweep needs positive bounds");
            if (spec.parameter == "n_s" && !cfg.simo)
                throw ConfigError("n_s sweep needs a simo block");
            cfg.sweep = spec;
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void override_models(ScenarioConfig& cfg, const std::string& selector) {
    if (selector.empty()) return;
    if (selector == "all")
        cfg.models = {FieldModel::Vef, FieldModel::Sef, FieldModel::Osef};
    else
        cfg.models = {model_from_name(selector)};
}

CrbResult evaluate_scenario(const ScenarioConfig& cfg, FieldModel model) {
    try {
        if (cfg.simo) {
            if (!cfg.terminal_cpl)
                throw ConfigError("multi-antenna evaluation requires a boresight terminal");
            const auto layout =
                build_layout(cfg.simo->n_s, cfg.simo->r_r, cfg.surface.diagonal, cfg.terminal.z);
            return crb_simo(layout, cfg.physical, model, cfg.numerics);
        }
        if (cfg.terminal_cpl) {
            const CplScenario sc(cfg.surface.diagonal / cfg.terminal.z, cfg.terminal.z,
                                 cfg.physical, model);
            return crb_cpl(sc, cfg.numerics);
        }
        return crb_point(cfg.terminal, cfg.surface, cfg.physical, model, cfg.numerics);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw NumericalError(e.what());
    }
}

namespace {

std::vector<double> sweep_values(const SweepSpec& s) {
    std::vector<double> vals(s.points);
    for (int i = 0; i < s.points; ++i) {
        const double t = static_cast<double>(i) / (s.points - 1);
        vals[i] = s.log_scale ? s.from * std::pow(s.to / s.from, t)
                              : s.from + (s.to - s.from) * t;
    }
    return vals;
}

ScenarioConfig apply_param(const ScenarioConfig& base, const std::string& name, double value) {
    ScenarioConfig cfg = base;
    if (name == "d_r")
        cfg.surface = SurfaceGeometry(value);
    else if (name == "z_t")
        cfg.terminal = TerminalPosition(cfg.terminal.x, cfg.terminal.y, value);
    else if (name == "lambda")
        cfg.physical.wavelength = value;
    else if (name == "snr_db")
        cfg.physical.snr = snr_db_to_linear(value);
    else if (name == "n_s") {
        int n = static_cast<int>(std::lround(value));
        if (n > 1 && n % 2 != 0) n += 1;
        cfg.simo->n_s = std::max(1, n);
    }
    cfg.physical.validate();
    return cfg;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, int threads) {
    if (!cfg.sweep) throw ConfigError("config has no sweep block");
    const auto values = sweep_values(*cfg.sweep);
    const int per_point = static_cast<int>(cfg.models.size());
    std::vector<SweepRow> rows(values.size() * per_point);
    parallel_for(static_cast<int>(rows.size()), threads, [&](int idx) {
        const int vi = idx / per_point;
        const FieldModel model = cfg.models[idx % per_point];
        const ScenarioConfig point = apply_param(cfg, cfg.sweep->parameter, values[vi]);
        rows[idx] = SweepRow{values[vi], model, evaluate_scenario(point, model)};
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "param_value,crb_x_m2,crb_y_m2,crb_z_m2,rcrb_x_cm,rcrb_y_cm,rcrb_z_cm,model,"
          "identifiable_x,identifiable_y,identifiable_z\n";
    for (const auto& r : rows) {
        os << format_float(r.param_value);
        for (int a = 0; a < 3; ++a) os << ',' << format_float(r.result.component(a));
        for (int a = 0; a < 3; ++a) os << ',' << format_float(r.result.rcrb_cm(a));
        os << ',' << model_name(r.model);
        for (int a = 0; a < 3; ++a) os << ',' << (r.result.identifiable(a) ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row = crb_json(r.result);
        row["param_value"] = r.param_value;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

std::string point_report(const ScenarioConfig& cfg) {
    json out;
    out["scenario"]["wavelength_m"] = cfg.physical.wavelength;
    out["scenario"]["snr_linear"] = cfg.physical.snr;
    out["scenario"]["snr_db"] = snr_linear_to_db(cfg.physical.snr);
    out["scenario"]["d_r_m"] = cfg.surface.diagonal;
    out["scenario"]["terminal_m"] = {cfg.terminal.x, cfg.terminal.y, cfg.terminal.z};
    out["scenario"]["cpl"] = cfg.terminal_cpl;
    out["regime"] = regime_name(regime_classify(cfg.terminal.range(), cfg.surface, cfg.physical));
    if (cfg.simo) {
        out["scenario"]["simo"]["n_s"] = cfg.simo->n_s;
        out["scenario"]["simo"]["r_r_m"] = cfg.simo->r_r;
    }
    out["results"] = json::array();
    for (const FieldModel m : cfg.models) out["results"].push_back(crb_json(evaluate_scenario(cfg, m)));
    return out.dump(2) + "\n";
}

AccuracyTable run_accuracy_table(int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    AccuracyTable table{};
    const double z_ref = 6.0;
    const double diagonals[4] = {0.5, 1.0, 2.0, 3.0};
    PhysicalConfig cfg(0.01, 10.0);
    Numerics num;
    num.quad.rel_tol = 1e-9;
    num.riemann_alpha = 201L * 201L;
    const FieldModel models[3] = {FieldModel::Vef, FieldModel::Sef, FieldModel::Osef};

    for (int mi = 0; mi < 3; ++mi)
        for (int di = 0; di < 4; ++di) {
            const CplScenario sc(diagonals[di] / z_ref, z_ref, cfg, models[mi]);
            const CrbResult r = crb_cpl(sc, num);
            for (int a = 0; a < 3; ++a) {
                table.identifiable[mi][a][di] = r.identifiable(a);
                table.rcrb_cm[mi][a][di] = r.rcrb_cm(a);
            }
        }

    // Average column: 1000 boresight depths equally spaced on [1, 20] m at
    // D = 3 m. The mean is taken over root CRBs.
    constexpr int kAvgCount = 1000;
    std::vector<std::array<double, 9>> rc(kAvgCount);
    std::vector<std::array<bool, 9>> ok(kAvgCount);
    parallel_for(kAvgCount, threads, [&](int i) {
        const double z = 1.0 + 19.0 * static_cast<double>(i) / (kAvgCount - 1);
        for (int mi = 0; mi < 3; ++mi) {
            const CplScenario sc(3.0 / z, z, cfg, models[mi]);
            const CrbResult r = crb_cpl(sc, num);
            for (int a = 0; a < 3; ++a) {
                rc[i][mi * 3 + a] = r.rcrb_cm(a);
                ok[i][mi * 3 + a] = r.identifiable(a);
            }
        }
    });
    for (int mi = 0; mi < 3; ++mi)
        for (int a = 0; a < 3; ++a) {
            bool all_ok = true;
            double sum = 0.0;
            for (int i = 0; i < kAvgCount; ++i) {
                all_ok = all_ok && ok[i][mi * 3 + a];
                if (ok[i][mi * 3 + a]) sum += rc[i][mi * 3 + a];
            }
            table.identifiable[mi][a][4] = all_ok;
            table.rcrb_cm[mi][a][4] = all_ok ? sum / kAvgCount : 0.0;
        }

    table.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

namespace {
std::string cell(const AccuracyTable& t, int mi, int a, int c) {
    if (!t.identifiable[mi][a][c]) return "-";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", t.rcrb_cm[mi][a][c]);
    return buf;
}
}  // namespace

std::string accuracy_table_text(const AccuracyTable& t) {
    std::ostringstream os;
    os << "Root CRB [cm], wavelength 0.01 m, linear SNR 10 (z = 6 m; average column: D = 3 m,\n"
          "1000 depths on [1, 20] m). '-' marks non-identifiable coordinates.\n\n";
    os << "model  axis |   D=0.5     D=1      D=2      D=3      avg\n";
    os << "------------+------------------------------------------------\n";
    const char* models[3] = {"vef ", "sef ", "osef"};
    const char axes[3] = {'x', 'y', 'z'};
    for (int mi = 0; mi < 3; ++mi)
        for (int a = 0; a < 3; ++a) {
            os << models[mi] << "   " << axes[a] << "    |";
            for (int c = 0; c < 5; ++c) {
                std::string s = cell(t, mi, a, c);
                os << "  " << s;
                for (size_t pad = s.size(); pad < 7; ++pad) os << ' ';
            }
            os << '\n';
        }
    return os.str();
}

std::string accuracy_table_csv(const AccuracyTable& t) {
    std::ostringstream os;
    os << "model,axis,d_0p5,d_1,d_2,d_3,average\n";
    const char* models[3] = {"vef", "sef", "osef"};
    const char axes[3] = {'x', 'y', 'z'};
    for (int mi = 0; mi < 3; ++mi)
        for (int a = 0; a < 3; ++a) {
            os << models[mi] << ',' << axes[a];
            for (int c = 0; c < 5; ++c) {
                os << ',';
                os << (t.identifiable[mi][a][c] ? format_float(t.rcrb_cm[mi][a][c]) : "-");
            }
            os << '\n';
        }
    return os.str();
}

ValidationReport run_validation() {
    ValidationReport rep;
    const auto add = [&](ValidationGroup g) {
        rep.pass = rep.pass && g.pass;
        rep.groups.push_back(std::move(g));
    };

    // Analytic gradients against central finite differences.
    {
        std::mt19937 rng(20240u);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            PhysicalConfig cfg(0.002 + 0.02 * std::abs(uni(rng)), 10.0);
            const TerminalPosition p_t(2.0 * uni(rng), 2.0 * uni(rng), 0.5 + 8.0 * std::abs(uni(rng)));
            const double xr = 1.5 * uni(rng), yr = 1.5 * uni(rng);
            const double r = std::sqrt((xr - p_t.x) * (xr - p_t.x) + (yr - p_t.y) * (yr - p_t.y) +
                                       p_t.z * p_t.z);
            // step capped against phase-truncation error at short wavelengths
            const double h = std::min(1e-6 * r, 1e-3 / cfg.wave_number());
            const auto g = vef_gradient(xr, yr, p_t, cfg);
            const auto gs = sef_gradient(xr, yr, p_t, cfg);
            double fro = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) fro += std::norm(g[a][b]);
            fro = std::sqrt(fro);
            double fros = std::sqrt(std::norm(gs[0]) + std::norm(gs[1]) + std::norm(gs[2]));
            for (int axis = 0; axis < 3; ++axis) {
                const auto shift = [&](double s) {
                    return TerminalPosition(p_t.x + (axis == 0 ? s : 0.0),
                                            p_t.y + (axis == 1 ? s : 0.0),
                                            p_t.z + (axis == 2 ? s : 0.0));
                };
                const auto fp = vef(xr, yr, shift(h), cfg);
                const auto fm = vef(xr, yr, shift(-h), cfg);
                const cplx fd[3] = {(fp.x - fm.x) / (2.0 * h), (fp.y - fm.y) / (2.0 * h),
                                    (fp.z - fm.z) / (2.0 * h)};
                for (int comp = 0; comp < 3; ++comp)
                    worst = std::max(worst, std::abs(g[comp][axis] - fd[comp]) / fro);
                const cplx sp = sef(xr, yr, shift(h), cfg);
                const cplx sm = sef(xr, yr, shift(-h), cfg);
                worst = std::max(worst, std::abs(gs[axis] - (sp - sm) / (2.0 * h)) / fros);
            }
        }
        add({"gradient_fd", worst, 1e-6, worst < 1e-6,
             "analytic field gradients vs central differences, 100 random configurations"});
    }

    // Closed integrand FIM against gradient outer products.
    {
        std::mt19937 rng(551u);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        double worst = 0.0;
        QuadratureSpec spec;
        for (int i = 0; i < 10; ++i) {
            PhysicalConfig cfg(0.01, 10.0);
            const TerminalPosition p_t(3.0 * uni(rng), 3.0 * uni(rng), 1.0 + 7.0 * std::abs(uni(rng)));
            const SurfaceGeometry geom(0.5 + 3.0 * std::abs(uni(rng)));
            for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
                const auto dom = RectDomain::aperture(geom);
                const FimMatrix a = m == FieldModel::Vef ? fim_vef(p_t, dom, cfg, spec)
                                                         : fim_sef(p_t, dom, cfg, spec);
                const FimMatrix b = fim_from_gradients(p_t, dom, cfg, m, spec);
                const double scale = a.max_diag();
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c)
                        worst = std::max(worst, std::abs(a(r, c) - b(r, c)) / scale);
            }
        }
        add({"dual_path_fim", worst, 1e-8, worst < 1e-8,
             "closed information integrands vs gradient outer products"});
    }

    // Closed forms against quadrature; the x amplitude formula must be caught
    // as a mismatch rather than silently used.
    {
        double worst = 0.0;
        bool amp_x_flagged = true;
        for (const double tau : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            const auto cf = rho_closed_form(tau);
            for (const ClosedFormEntry* e : {&cf.amp_y, &cf.phase_z, &cf.amp_z})
                worst = std::max(worst, std::abs(e->value - e->numeric) / std::abs(e->numeric));
            amp_x_flagged = amp_x_flagged && cf.amp_x.mismatch;
        }
        add({"closed_forms", worst, 1e-7, worst < 1e-7 && amp_x_flagged,
             amp_x_flagged ? "amp_x formula flagged as documented mismatch"
                           : "amp_x mismatch went undetected"});
    }

    // Disk bounds sandwich the quadrature values.
    {
        double worst = -1e300;  // positive means a violated bound
        for (const double tau : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0})
            for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
                const auto t = rho_full(tau, m);
                for (int axis = 0; axis < 3; ++axis)
                    for (const RhoValue* v : {&t.phase[axis], &t.amp[axis]})
                        if (v->bounds) {
                            worst = std::max(worst, v->bounds->first - v->numeric);
                            worst = std::max(worst, v->numeric - v->bounds->second);
                        }
            }
        add({"bound_sandwich", worst, 0.0, worst < 0.0,
             "inscribed/circumscribed disk bounds vs quadrature"});
    }

    // Distributed-layout symmetry.
    {
        PhysicalConfig cfg(0.001, 10.0);
        const auto layout = build_layout(2, 30.0, 2.0, 6.0);
        double worst = 0.0;
        bool control_ok = true;
        for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
            const auto r = lemma1_check(layout, cfg, m);
            worst = std::max({worst, r.max_offdiag_ratio, r.max_partner_deviation});
            control_ok = control_ok && r.broken_offdiag_ratio > 1e-6;
        }
        add({"layout_symmetry", worst, 1e-10, worst < 1e-10 && control_ok,
             control_ok ? "off-diagonal cancellation plus negative control"
                        : "negative control failed to break symmetry"});
    }

    // Regime inequalities: the amplitude terms stay subdominant at depth, and
    // the amplitude integral never exceeds the phase integral by much.
    {
        double min_ratio = 1e300;
        double min_diff = 1e300;
        for (const double tau : {0.4, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            const double k2z2 = std::pow(2.0 * std::numbers::pi * 100.0, 2.0);  // z = 100 lambda
            for (const FieldModel m : {FieldModel::Vef, FieldModel::Sef}) {
                const auto t = rho_numeric(tau, m);
                for (int axis = 0; axis < 3; ++axis)
                    min_ratio = std::min(min_ratio, k2z2 * t.phase[axis].numeric / t.amp[axis].numeric);
            }
            const auto tv = rho_numeric(tau, FieldModel::Vef);
            min_diff = std::min(min_diff, tv.phase[1].numeric - tv.amp[1].numeric);
        }
        const bool pass = min_ratio >= 1e3 && min_diff > -2.34;
        add({"regime_inequalities", min_ratio, 1e3, pass,
             "phase-to-amplitude information ratio at depth 100 wavelengths"});
    }

    return rep;
}

std::string validation_json(const ValidationReport& rep) {
    json out;
    out["pass"] = rep.pass;
    out["groups"] = json::array();
    for (const auto& g : rep.groups)
        out["groups"].push_back({{"name", g.name},
                                 {"deviation", g.deviation},
                                 {"threshold", g.threshold},
                                 {"pass", g.pass},
                                 {"note", g.note}});
    return out.dump(2) + "\n";
}

}  // namespace nearcrb
