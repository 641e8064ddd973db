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

#include "qmv/builtins.hpp"

#include <cmath>

namespace qmv {

namespace {

MatrixSpec basis_ket_spec(int dim, int index) {
    return MatrixSpec::from_ket(basis_ket(dim, index));
}

ScenarioFile cnot2_scenario() {
    ScenarioFile s;
    s.name = "cnot2";
    s.object_dim = 2;
    s.probe_dims = {2};
    s.builtin_unitary = "cnot";
    s.probe_state = basis_ket_spec(2, 0);
    s.channels = {{"ch1", {0}}, {"ch2", {1}}};
    FamilySpec fam;
    fam.x1 = basis_ket_spec(2, 0);
    fam.x2 = basis_ket_spec(2, 1);
    fam.c1_sq = 0.36;
    fam.c2_sq = 0.64;
    fam.phase = 0.0;
    s.family = fam;
    s.discriminating_readings.emplace("ch1", basis_ket_spec(2, 0));
    s.discriminating_readings.emplace("ch2", basis_ket_spec(2, 0));
    s.input_state.kind = InputSpec::Kind::Coherent;
    s.input_state.phase = 0.0;
    s.suites = {"axioms",     "discrimination", "probability_rule",
                "state_reduction", "objectivity",    "membership",
                "consistency", "induced_observable", "output_states"};
    s.seed = 42;
    s.trials = 100000;
    return s;
}

ScenarioFile cnot3_scenario() {
    ScenarioFile base = cnot2_scenario();
    // Chain a second copy interaction onto the probe channel; the composed
    // evolution is shipped as an explicit matrix.
    MeasurementModel first = base.build_model();
    MeasurementModel second = base.build_model();
    MeasurementModel chained = compose_measurement(first, "ch2", second, {"ch3"});

    ScenarioFile s;
    s.name = "cnot3";
    s.object_dim = 2;
    s.probe_dims = {2, 2};
    s.unitary_matrix = MatrixSpec::from_matrix(chained.unitary()).matrix;
    s.probe_state = basis_ket_spec(4, 0);
    s.channels = {{"ch1", {0}}, {"ch2", {1}}, {"ch3", {2}}};
    s.family = base.family;
    s.discriminating_readings.emplace("ch1", basis_ket_spec(2, 0));
    s.discriminating_readings.emplace("ch2", basis_ket_spec(2, 0));
    s.discriminating_readings.emplace("ch3", basis_ket_spec(2, 0));
    s.input_state.kind = InputSpec::Kind::Coherent;
    s.input_state.phase = 0.0;
    s.suites = {"axioms", "discrimination", "probability_rule", "objectivity"};
    s.seed = 42;
    s.trials = 100000;
    return s;
}

ScenarioFile qutrit3_scenario() {
    ScenarioFile s;
    s.name = "qutrit3";
    s.object_dim = 3;
    s.probe_dims = {3};
    s.builtin_unitary = "qutrit-shift";
    s.probe_state = basis_ket_spec(3, 0);
    s.channels = {{"ch1", {0}}, {"ch2", {1}}};
    MultiwaySpec mw;
    for (int i = 0; i < 3; ++i) {
        mw.states.push_back(basis_ket_spec(3, i));
    }
    std::vector<MatrixSpec> readings;
    for (int i = 0; i < 3; ++i) {
        readings.push_back(basis_ket_spec(3, i));
    }
    mw.readings.emplace("ch1", readings);
    mw.readings.emplace("ch2", readings);
    s.multiway = std::move(mw);
    s.input_state.kind = InputSpec::Kind::Explicit;
    s.input_state.explicit_state = MatrixSpec::from_diagonal({0.2, 0.3, 0.5});
    s.suites = {"axioms", "discrimination"};
    s.seed = 42;
    s.trials = 100000;
    return s;
}

ScenarioFile cnot2_corrupted_scenario() {
    ScenarioFile s = cnot2_scenario();
    s.name = "cnot2-corrupted";
    // The second channel is "read" along the wrong basis: this reading does
    // not discriminate, and the suites must catch it.
    ComplexVector plus = (basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0);
    s.discriminating_readings.erase("ch2");
    s.discriminating_readings.emplace("ch2", MatrixSpec::from_ket(plus));
    s.suites = {"discrimination", "probability_rule", "objectivity"};
    return s;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() {
    return {"cnot2", "cnot3", "qutrit3", "cnot2-corrupted"};
}

bool is_builtin_scenario(const std::string& name) {
    for (const auto& n : builtin_scenario_names()) {
        if (n == name) {
            return true;
        }
    }
    return false;
}

ScenarioFile builtin_scenario(const std::string& name) {
    if (name == "cnot2") {
        return cnot2_scenario();
    }
    if (name == "cnot3") {
        return cnot3_scenario();
    }
    if (name == "qutrit3") {
        return qutrit3_scenario();
    }
    if (name == "cnot2-corrupted") {
        return cnot2_corrupted_scenario();
    }
    throw ScenarioError("unknown builtin scenario '" + name + "'");
}

}  // namespace qmv
