// Copyright 2026 The qmv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmv/builtins.hpp"
#include "qmv/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitScenarioError = 2;

qmv::ScenarioFile load_scenario(const std::string& ref, const qmv::ToleranceConfig& tol) {
    if (qmv::is_builtin_scenario(ref)) {
        return qmv::builtin_scenario(ref);
    }
    std::ifstream in(ref);
    if (!in) {
        throw qmv::ScenarioError("cannot open scenario file '" + ref + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return qmv::parse_scenario(text.str(), tol);
}

int emit(const qmv::VerificationReport& report, const std::string& format,
         const std::string& output) {
    std::string rendered = (format == "text") ? report.to_text() : report.to_json();
    if (output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write to '" << output << "'\n";
            return kExitScenarioError;
        }
        out << rendered;
    }
    return report.all_pass() ? kExitPass : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-channel quantum measurement models: axiom verification, "
                 "objectivity checks, and seeded trial sampling"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance_scale;
    app.add_option("--format", format, "Report format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "Write the report to a file instead of stdout");
    app.add_option("--seed", seed, "Override the scenario's seed");
    app.add_option("--tolerance-scale", tolerance_scale,
                   "Multiply every tolerance by this factor");

    // Global flags may follow the subcommand (qmv sample cnot2 --seed 42).
    app.fallthrough();

    std::string verify_ref;
    auto* verify =
        app.add_subcommand("verify", "Run the scenario's verification suites");
    verify->add_option("scenario", verify_ref, "Scenario file or builtin name")->required();

    std::string sample_ref;
    std::optional<long> trials;
    auto* sample = app.add_subcommand(
        "sample", "Sample trials and compare frequencies against the model");
    sample->add_option("scenario", sample_ref, "Scenario file or builtin name")->required();
    sample->add_option("--trials", trials, "Number of trials (default: scenario value)");

    int fuzz_object_dim = 2;
    std::vector<int> fuzz_probe_dims{2};
    int fuzz_count = 10;
    std::uint64_t fuzz_seed = 1;
    auto* fuzz = app.add_subcommand(
        "fuzz", "Run the axiom suite on randomly generated unitary models");
    fuzz->add_option("--object-dim", fuzz_object_dim, "Object dimension (>= 2)");
    fuzz->add_option("--probe-dims", fuzz_probe_dims, "Probe factor dimensions (each >= 2)");
    fuzz->add_option("--count", fuzz_count, "Number of random models");

    std::string export_ref;
    auto* exp = app.add_subcommand("export", "Print a scenario in canonical JSON form");
    exp->add_option("scenario", export_ref, "Scenario file or builtin name")->required();

    CLI11_PARSE(app, argc, argv);

    qmv::ToleranceConfig base_tol;
    auto started = std::chrono::steady_clock::now();
    int exit_code = kExitPass;
    try {
        if (*verify) {
            auto sf = load_scenario(verify_ref, base_tol);
            auto report = qmv::run_verification(sf, seed, tolerance_scale, base_tol);
            exit_code = emit(report, format, output);
        } else if (*sample) {
            auto sf = load_scenario(sample_ref, base_tol);
            auto report = qmv::run_sampler(sf, trials, seed, tolerance_scale, base_tol);
            exit_code = emit(report, format, output);
        } else if (*fuzz) {
            auto report = qmv::run_fuzz(fuzz_object_dim, fuzz_probe_dims, fuzz_count,
                                        seed.value_or(fuzz_seed),
                                        tolerance_scale.value_or(1.0), base_tol);
            exit_code = emit(report, format, output);
        } else if (*exp) {
            auto sf = load_scenario(export_ref, base_tol);
            std::string text = qmv::serialize_scenario(sf);
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output, std::ios::binary);
                out << text;
            }
        }
    } catch (const qmv::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return kExitScenarioError;
    } catch (const qmv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSuiteFailure;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "completed in " << elapsed << " ms\n";
    return exit_code;
}
