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

#include <string>
#include <vector>

#include "nearcrb/simo.hpp"

namespace nearcrb {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimoSettings {
    int n_s = 2;
    double r_r = 30.0;
};

struct SweepSpec {
    std::string parameter;  // d_r | z_t | lambda | snr_db | n_s
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    bool log_scale = false;
};

struct ScenarioConfig {
    PhysicalConfig physical;
    SurfaceGeometry surface;
    TerminalPosition terminal;
    bool terminal_cpl = false;
    std::vector<FieldModel> models;  // evaluation order
    Numerics numerics;
    std::optional<SimoSettings> simo;
    std::optional<SweepSpec> sweep;
};

std::string model_name(FieldModel m);
FieldModel model_from_name(const std::string& name);

/// Parse and validate a JSON config document (see README for the schema).
ScenarioConfig parse_config(const std::string& json_text);
ScenarioConfig load_config(const std::string& path);

/// Apply a --model override ("vef", "sef", "osef", "all").
void override_models(ScenarioConfig& cfg, const std::string& selector);

/// Evaluate one scenario (single- or multi-antenna) for one model.
CrbResult evaluate_scenario(const ScenarioConfig& cfg, FieldModel model);

struct SweepRow {
    double param_value = 0.0;
    FieldModel model = FieldModel::Vef;
    CrbResult result;
};

/// Run the sweep with a fixed worker count; row order is independent of the
/// thread count.
std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg, int threads);

/// Fixed-schema CSV: param_value, crb_*_m2, rcrb_*_cm, model, identifiable_*.
/// Floats carry nine significant digits; non-identifiable entries print inf.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

/// Single-point report as a JSON document string.
std::string point_report(const ScenarioConfig& cfg);

/// The reference accuracy table: surface diagonals {0.5, 1, 2, 3} m at
/// z = 6 m plus an average column over 1000 boresight depths equally spaced
/// on [1, 20] m with D = 3 m; wavelength 0.01 m, linear SNR 10, aggregated
/// grid 201^2. Root CRBs in centimeters; non-identifiable cells are "-".
struct AccuracyTable {
    // [model][axis][column]; columns 0..3 = diagonals, 4 = average
    double rcrb_cm[3][3][5];
    bool identifiable[3][3][5];
    double elapsed_seconds = 0.0;
};
AccuracyTable run_accuracy_table(int threads = 1);
std::string accuracy_table_text(const AccuracyTable& t);
std::string accuracy_table_csv(const AccuracyTable& t);

/// Self-validation of the analytic machinery against independent oracles.
struct ValidationGroup {
    std::string name;
    double deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};
struct ValidationReport {
    std::vector<ValidationGroup> groups;
    bool pass = true;
};
ValidationReport run_validation();
std::string validation_json(const ValidationReport& rep);

std::string format_float(double v);  // nine significant digits, inf-safe

}  // namespace nearcrb
