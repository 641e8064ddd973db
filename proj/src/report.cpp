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

#include "qmv/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qmv {

bool VerificationReport::all_pass() const {
    for (const auto& suite : suites) {
        if (!suite.skipped && !suite.pass) {
            return false;
        }
    }
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario_name;
    j["seed"] = seed;
    j["tolerance_scale"] = tolerance_scale;
    j["pass"] = all_pass();
    j["suites"] = nlohmann::ordered_json::array();
    for (const auto& suite : suites) {
        nlohmann::ordered_json s;
        s["name"] = suite.name;
        if (suite.skipped) {
            s["skipped"] = true;
            s["skip_reason"] = suite.skip_reason;
        } else {
            s["pass"] = suite.pass;
            s["max_residual"] = suite.max_residual;
            s["tolerance"] = suite.tolerance;
            s["checks"] = suite.checks;
            if (!suite.worst_witness.empty()) {
                s["worst_witness"] = suite.worst_witness;
            }
        }
        if (!suite.details.empty()) {
            s["details"] = suite.details;
        }
        if (!suite.notes.empty()) {
            s["notes"] = suite.notes;
        }
        j["suites"].push_back(s);
    }
    return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "scenario: " << scenario_name << "  (seed " << seed;
    if (tolerance_scale != 1.0) {
        out << ", tolerance scale " << tolerance_scale;
    }
    out << ")\n";
    for (const auto& suite : suites) {
        if (suite.skipped) {
            out << "  [skip] " << std::left << std::setw(20) << suite.name << " "
                << suite.skip_reason << "\n";
            continue;
        }
        out << (suite.pass ? "  [pass] " : "  [FAIL] ") << std::left << std::setw(20)
            << suite.name << " max residual " << std::scientific << std::setprecision(3)
            << suite.max_residual << " (tol " << suite.tolerance << ", " << std::defaultfloat
            << suite.checks << " checks)";
        if (!suite.pass && !suite.worst_witness.empty()) {
            out << "\n          worst: " << suite.worst_witness;
        }
        out << "\n";
        for (const auto& note : suite.notes) {
            out << "          " << note << "\n";
        }
    }
    out << (all_pass() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return out.str();
}

}  // namespace qmv
