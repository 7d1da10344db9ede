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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nearcrb/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw nearcrb::ConfigError("cannot open output file: " + out_path);
    out << text;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const nearcrb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positioning accuracy bounds for near-field electromagnetic observation"};
    app.require_subcommand(1);

    std::string config_path, out_path, model_sel, format = "csv";
    int threads = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", config_path, "JSON scenario config");
        if (needs_config) opt->required();
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--model", model_sel, "vef | sef | osef | all (overrides config)");
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    };

    auto* point = app.add_subcommand("point", "CRBs for a single scenario");
    add_common(point, true);
    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV/JSON");
    add_common(sweep, true);
    auto* table1 = app.add_subcommand("table1", "reference accuracy table");
    add_common(table1, false);
    auto* simo = app.add_subcommand("simo", "distributed-receiver CRBs (needs a simo block)");
    add_common(simo, true);
    auto* validate = app.add_subcommand("validate", "run the self-validation oracle suites");
    add_common(validate, false);

    CLI11_PARSE(app, argc, argv);

    if (point->parsed() || simo->parsed()) {
        return guarded([&] {
            auto cfg = nearcrb::load_config(config_path);
            if (simo->parsed() && !cfg.simo)
                throw nearcrb::ConfigError("the simo subcommand needs a simo block in the config");
            nearcrb::override_models(cfg, model_sel);
            write_output(nearcrb::point_report(cfg), out_path);
            return kExitOk;
        });
    }
    if (sweep->parsed()) {
        return guarded([&] {
            auto cfg = nearcrb::load_config(config_path);
            nearcrb::override_models(cfg, model_sel);
            const auto rows = nearcrb::run_sweep(cfg, threads);
            write_output(format == "json" ? nearcrb::sweep_json(rows) : nearcrb::sweep_csv(rows),
                         out_path);
            return kExitOk;
        });
    }
    if (table1->parsed()) {
        return guarded([&] {
            const auto t = nearcrb::run_accuracy_table(threads);
            std::cout << nearcrb::accuracy_table_text(t);
            std::cout << "computed in " << nearcrb::format_float(t.elapsed_seconds) << " s\n";
            if (!out_path.empty()) write_output(nearcrb::accuracy_table_csv(t), out_path);
            return kExitOk;
        });
    }
    // validate
    return guarded([&] {
        const auto rep = nearcrb::run_validation();
        write_output(nearcrb::validation_json(rep), out_path);
        return rep.pass ? kExitOk : kExitValidation;
    });
}
