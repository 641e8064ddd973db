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

#include "qmv/scenario.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qmv {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// MatrixSpec
// ---------------------------------------------------------------------------

ComplexMatrix MatrixSpec::build(const std::string& field) const {
    int forms = (matrix ? 1 : 0) + (ket ? 1 : 0) + (diagonal ? 1 : 0);
    if (forms != 1) {
        throw ScenarioError(field + ": exactly one of 'matrix', 'ket', 'diag' required");
    }
    if (matrix) {
        size_t rows = matrix->size();
        if (rows == 0) {
            throw ScenarioError(field + ": empty matrix");
        }
        ComplexMatrix m(rows, (*matrix)[0].size());
        for (size_t i = 0; i < rows; ++i) {
            if ((*matrix)[i].size() != static_cast<size_t>(m.cols())) {
                throw ScenarioError(field + ": ragged matrix rows");
            }
            for (size_t j = 0; j < (*matrix)[i].size(); ++j) {
                m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*matrix)[i][j];
            }
        }
        return m;
    }
    if (ket) {
        ComplexVector v(ket->size());
        for (size_t i = 0; i < ket->size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = (*ket)[i];
        }
        if (v.norm() <= 0.0) {
            throw ScenarioError(field + ": ket must be nonzero");
        }
        return projector(v);
    }
    ComplexMatrix m = zeros(static_cast<int>(diagonal->size()), static_cast<int>(diagonal->size()));
    for (size_t i = 0; i < diagonal->size(); ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = (*diagonal)[i];
    }
    return m;
}

MatrixSpec MatrixSpec::from_matrix(const ComplexMatrix& m) {
    MatrixSpec spec;
    std::vector<std::vector<Complex>> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::vector<Complex> row;
        row.reserve(static_cast<size_t>(m.cols()));
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    spec.matrix = std::move(rows);
    return spec;
}

MatrixSpec MatrixSpec::from_ket(const ComplexVector& v) {
    MatrixSpec spec;
    std::vector<Complex> entries;
    entries.reserve(static_cast<size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        entries.push_back(v(i));
    }
    spec.ket = std::move(entries);
    return spec;
}

MatrixSpec MatrixSpec::from_diagonal(std::vector<double> d) {
    MatrixSpec spec;
    spec.diagonal = std::move(d);
    return spec;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

ComplexMatrix shift_unitary(int d) {
    ComplexMatrix s = zeros(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            s(i * d + (i + j) % d, i * d + j) = 1.0;
        }
    }
    return s;
}

namespace {

int product(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) {
        p *= d;
    }
    return p;
}

[[noreturn]] void rethrow_as_scenario(const std::string& field, const Error& e) {
    throw ScenarioError(field + ": " + e.what());
}

}  // namespace

MeasurementModel ScenarioFile::build_model(const ToleranceConfig& tol) const {
    std::vector<int> dims;
    dims.push_back(object_dim);
    dims.insert(dims.end(), probe_dims.begin(), probe_dims.end());

    ComplexMatrix s;
    if (builtin_unitary == "cnot") {
        if (object_dim != 2 || product(probe_dims) != 2) {
            throw ScenarioError("unitary: builtin 'cnot' needs object and probe of dimension 2");
        }
        s = shift_unitary(2);
    } else if (builtin_unitary == "qutrit-shift") {
        if (object_dim != 3 || product(probe_dims) != 3) {
            throw ScenarioError(
                "unitary: builtin 'qutrit-shift' needs object and probe of dimension 3");
        }
        s = shift_unitary(3);
    } else if (builtin_unitary.empty()) {
        if (!unitary_matrix) {
            throw ScenarioError("unitary: either a builtin name or explicit entries required");
        }
        MatrixSpec spec;
        spec.matrix = unitary_matrix;
        s = spec.build("unitary");
    } else {
        throw ScenarioError("unitary: unknown builtin '" + builtin_unitary + "'");
    }

    DensityOperator probe = [&] {
        try {
            return DensityOperator(probe_state.build("probe_state"), tol);
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            rethrow_as_scenario("probe_state", e);
        }
    }();

    std::vector<ChannelLayout::Channel> chs;
    for (const auto& c : channels) {
        chs.push_back(ChannelLayout::Channel{c.name, c.factors});
    }
    try {
        ChannelLayout layout(DimensionLayout(dims), chs, unobserved_factors);
        return MeasurementModel(object_dim, probe, s, layout, tol);
    } catch (const Error& e) {
        if (!builtin_unitary.empty()) {
            rethrow_as_scenario("channels", e);
        }
        std::ostringstream msg;
        msg << "model: " << e.what();
        if (s.rows() == s.cols()) {
            msg << " (unitarity residual " << unitarity_defect(s) << ")";
        }
        throw ScenarioError(msg.str());
    }
}

SuperpositionFamily ScenarioFile::build_family(const ToleranceConfig& tol) const {
    if (!family) {
        throw ScenarioError("family: missing");
    }
    try {
        DensityOperator x1(family->x1.build("family.x1"), tol);
        DensityOperator x2(family->x2.build("family.x2"), tol);
        Weights w(family->c1_sq, family->c2_sq, family->phase, tol);
        return SuperpositionFamily(x1, x2, w, tol);
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        rethrow_as_scenario("family", e);
    }
}

DiscriminationScenario ScenarioFile::build_scenario(const ToleranceConfig& tol) const {
    MeasurementModel model = build_model(tol);
    SuperpositionFamily fam = build_family(tol);
    std::map<std::string, Effect> readings;
    for (const auto& [name, spec] : discriminating_readings) {
        if (!model.channel_layout().has_channel(name)) {
            throw ScenarioError("discriminating_readings: unknown channel '" + name + "'");
        }
        try {
            readings.emplace(name,
                             Effect(spec.build("discriminating_readings." + name), tol));
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            rethrow_as_scenario("discriminating_readings." + name, e);
        }
    }
    return DiscriminationScenario{std::move(model), std::move(fam), std::move(readings)};
}

MultiwayScenario ScenarioFile::build_multiway(const ToleranceConfig& tol) const {
    if (!multiway) {
        throw ScenarioError("multiway: missing");
    }
    MeasurementModel model = build_model(tol);
    MultiwayScenario mw{std::move(model), {}, {}};
    try {
        for (size_t i = 0; i < multiway->states.size(); ++i) {
            mw.states.emplace_back(
                multiway->states[i].build("multiway.states[" + std::to_string(i) + "]"), tol);
        }
        for (const auto& [name, specs] : multiway->readings) {
            if (!mw.model.channel_layout().has_channel(name)) {
                throw ScenarioError("multiway.readings: unknown channel '" + name + "'");
            }
            std::vector<Effect> effects;
            for (size_t i = 0; i < specs.size(); ++i) {
                effects.emplace_back(specs[i].build("multiway.readings." + name), tol);
            }
            mw.readings.emplace(name, std::move(effects));
        }
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        rethrow_as_scenario("multiway", e);
    }
    return mw;
}

DensityOperator ScenarioFile::build_input_state(const ToleranceConfig& tol) const {
    try {
        switch (input_state.kind) {
            case InputSpec::Kind::Explicit:
                if (!input_state.explicit_state) {
                    throw ScenarioError("input_state: explicit form requires a state");
                }
                return DensityOperator(input_state.explicit_state->build("input_state"), tol);
            case InputSpec::Kind::Mixture: {
                SuperpositionFamily fam = build_family(tol);
                return mix(fam.weights(), fam.x1(), fam.x2(), tol);
            }
            case InputSpec::Kind::Coherent:
            default: {
                SuperpositionFamily fam = build_family(tol);
                return coherent(fam, input_state.phase, tol);
            }
        }
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        rethrow_as_scenario("input_state", e);
    }
}

std::vector<Weights> ScenarioFile::build_weight_grid(const ToleranceConfig& tol) const {
    if (weight_grid.empty()) {
        return default_weight_grid();
    }
    std::vector<Weights> grid;
    for (const auto& [c1, c2] : weight_grid) {
        try {
            grid.emplace_back(c1, c2, std::nullopt, tol);
        } catch (const Error& e) {
            rethrow_as_scenario("weight_grid", e);
        }
    }
    return grid;
}

std::vector<double> ScenarioFile::build_phase_grid() const {
    if (phase_count < 1) {
        throw ScenarioError("phase_count: must be positive");
    }
    return default_phase_grid(phase_count);
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

namespace {

ordered_json complex_to_json(const Complex& c) {
    return ordered_json::array({c.real(), c.imag()});
}

Complex complex_from_json(const ordered_json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ScenarioError(field + ": complex entries are [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ordered_json matrix_spec_to_json(const MatrixSpec& spec) {
    ordered_json j;
    if (spec.matrix) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : *spec.matrix) {
            ordered_json r = ordered_json::array();
            for (const auto& c : row) {
                r.push_back(complex_to_json(c));
            }
            rows.push_back(r);
        }
        j["matrix"] = rows;
    } else if (spec.ket) {
        ordered_json k = ordered_json::array();
        for (const auto& c : *spec.ket) {
            k.push_back(complex_to_json(c));
        }
        j["ket"] = k;
    } else if (spec.diagonal) {
        j["diag"] = *spec.diagonal;
    }
    return j;
}

MatrixSpec matrix_spec_from_json(const ordered_json& j, const std::string& field) {
    if (!j.is_object()) {
        throw ScenarioError(field + ": expected an object with 'matrix', 'ket' or 'diag'");
    }
    MatrixSpec spec;
    if (j.contains("matrix")) {
        std::vector<std::vector<Complex>> rows;
        for (size_t i = 0; i < j["matrix"].size(); ++i) {
            std::vector<Complex> row;
            for (size_t k = 0; k < j["matrix"][i].size(); ++k) {
                row.push_back(complex_from_json(j["matrix"][i][k], field + ".matrix"));
            }
            rows.push_back(std::move(row));
        }
        spec.matrix = std::move(rows);
    }
    if (j.contains("ket")) {
        std::vector<Complex> entries;
        for (size_t i = 0; i < j["ket"].size(); ++i) {
            entries.push_back(complex_from_json(j["ket"][i], field + ".ket"));
        }
        spec.ket = std::move(entries);
    }
    if (j.contains("diag")) {
        if (!j["diag"].is_array()) {
            throw ScenarioError(field + ".diag: expected an array of reals");
        }
        spec.diagonal = j["diag"].get<std::vector<double>>();
    }
    int forms = (spec.matrix ? 1 : 0) + (spec.ket ? 1 : 0) + (spec.diagonal ? 1 : 0);
    if (forms != 1) {
        throw ScenarioError(field + ": exactly one of 'matrix', 'ket', 'diag' required");
    }
    return spec;
}

template <typename T>
T require(const ordered_json& j, const std::string& field) {
    if (!j.contains(field)) {
        throw ScenarioError(field + ": missing");
    }
    try {
        return j.at(field).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ScenarioError(field + ": wrong type");
    }
}

}  // namespace

std::string serialize_scenario(const ScenarioFile& s) {
    ordered_json j;
    j["name"] = s.name;
    j["object_dim"] = s.object_dim;
    j["probe_dims"] = s.probe_dims;
    if (!s.builtin_unitary.empty()) {
        j["unitary"] = ordered_json{{"builtin", s.builtin_unitary}};
    } else {
        MatrixSpec spec;
        spec.matrix = s.unitary_matrix;
        j["unitary"] = matrix_spec_to_json(spec);
    }
    j["probe_state"] = matrix_spec_to_json(s.probe_state);
    j["channels"] = ordered_json::array();
    for (const auto& c : s.channels) {
        j["channels"].push_back(ordered_json{{"name", c.name}, {"factors", c.factors}});
    }
    if (!s.unobserved_factors.empty()) {
        j["unobserved_factors"] = s.unobserved_factors;
    }
    if (s.family) {
        ordered_json f;
        f["x1"] = matrix_spec_to_json(s.family->x1);
        f["x2"] = matrix_spec_to_json(s.family->x2);
        f["c1_sq"] = s.family->c1_sq;
        f["c2_sq"] = s.family->c2_sq;
        if (s.family->phase) {
            f["phase"] = *s.family->phase;
        }
        j["family"] = f;
    }
    if (!s.discriminating_readings.empty()) {
        ordered_json r;
        for (const auto& [name, spec] : s.discriminating_readings) {
            r[name] = matrix_spec_to_json(spec);
        }
        j["discriminating_readings"] = r;
    }
    if (s.multiway) {
        ordered_json mw;
        mw["states"] = ordered_json::array();
        for (const auto& spec : s.multiway->states) {
            mw["states"].push_back(matrix_spec_to_json(spec));
        }
        ordered_json r;
        for (const auto& [name, specs] : s.multiway->readings) {
            ordered_json arr = ordered_json::array();
            for (const auto& spec : specs) {
                arr.push_back(matrix_spec_to_json(spec));
            }
            r[name] = arr;
        }
        mw["readings"] = r;
        j["multiway"] = mw;
    }
    {
        ordered_json in;
        switch (s.input_state.kind) {
            case InputSpec::Kind::Coherent:
                in["type"] = "coherent";
                in["phase"] = s.input_state.phase;
                break;
            case InputSpec::Kind::Mixture:
                in["type"] = "mixture";
                break;
            case InputSpec::Kind::Explicit:
                in["type"] = "explicit";
                in["state"] = matrix_spec_to_json(*s.input_state.explicit_state);
                break;
        }
        j["input_state"] = in;
    }
    j["suites"] = s.suites;
    if (!s.weight_grid.empty()) {
        ordered_json grid = ordered_json::array();
        for (const auto& [a, b] : s.weight_grid) {
            grid.push_back(ordered_json::array({a, b}));
        }
        j["weight_grid"] = grid;
    }
    j["phase_count"] = s.phase_count;
    j["axiom_samples"] = s.axiom_samples;
    j["law_effects"] = s.law_effects;
    j["reduction_samples"] = s.reduction_samples;
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    if (s.tolerance_scale != 1.0) {
        j["tolerance_scale"] = s.tolerance_scale;
    }
    return j.dump(2) + "\n";
}

ScenarioFile parse_scenario(const std::string& text, const ToleranceConfig& tol) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ScenarioError("scenario: top level must be a JSON object");
    }

    ScenarioFile s;
    s.name = require<std::string>(j, "name");
    s.object_dim = require<int>(j, "object_dim");
    s.probe_dims = require<std::vector<int>>(j, "probe_dims");
    if (s.object_dim < 2) {
        throw ScenarioError("object_dim: must be at least 2");
    }
    for (int d : s.probe_dims) {
        if (d < 2) {
            throw ScenarioError("probe_dims: every factor dimension must be at least 2");
        }
    }

    if (!j.contains("unitary") || !j["unitary"].is_object()) {
        throw ScenarioError("unitary: missing");
    }
    if (j["unitary"].contains("builtin")) {
        s.builtin_unitary = j["unitary"]["builtin"].get<std::string>();
    } else {
        MatrixSpec spec = matrix_spec_from_json(j["unitary"], "unitary");
        if (!spec.matrix) {
            throw ScenarioError("unitary: explicit form requires 'matrix'");
        }
        s.unitary_matrix = spec.matrix;
    }

    if (!j.contains("probe_state")) {
        throw ScenarioError("probe_state: missing");
    }
    s.probe_state = matrix_spec_from_json(j["probe_state"], "probe_state");

    if (!j.contains("channels") || !j["channels"].is_array() || j["channels"].empty()) {
        throw ScenarioError("channels: at least one channel required");
    }
    for (const auto& c : j["channels"]) {
        ChannelSpec spec;
        spec.name = require<std::string>(c, "name");
        spec.factors = require<std::vector<int>>(c, "factors");
        s.channels.push_back(std::move(spec));
    }
    if (j.contains("unobserved_factors")) {
        s.unobserved_factors = j["unobserved_factors"].get<std::vector<int>>();
    }

    if (j.contains("family")) {
        const auto& f = j["family"];
        FamilySpec fam;
        fam.x1 = matrix_spec_from_json(f.contains("x1") ? f["x1"] : ordered_json(), "family.x1");
        fam.x2 = matrix_spec_from_json(f.contains("x2") ? f["x2"] : ordered_json(), "family.x2");
        fam.c1_sq = require<double>(f, "c1_sq");
        fam.c2_sq = require<double>(f, "c2_sq");
        if (f.contains("phase")) {
            fam.phase = f["phase"].get<double>();
        }
        s.family = std::move(fam);
    }

    if (j.contains("discriminating_readings")) {
        for (const auto& [name, spec] : j["discriminating_readings"].items()) {
            s.discriminating_readings.emplace(
                name, matrix_spec_from_json(spec, "discriminating_readings." + name));
        }
    }

    if (j.contains("multiway")) {
        const auto& mw = j["multiway"];
        MultiwaySpec spec;
        if (!mw.contains("states") || !mw["states"].is_array()) {
            throw ScenarioError("multiway.states: missing");
        }
        for (size_t i = 0; i < mw["states"].size(); ++i) {
            spec.states.push_back(matrix_spec_from_json(
                mw["states"][i], "multiway.states[" + std::to_string(i) + "]"));
        }
        if (!mw.contains("readings") || !mw["readings"].is_object()) {
            throw ScenarioError("multiway.readings: missing");
        }
        for (const auto& [name, arr] : mw["readings"].items()) {
            std::vector<MatrixSpec> effects;
            for (size_t i = 0; i < arr.size(); ++i) {
                effects.push_back(matrix_spec_from_json(arr[i], "multiway.readings." + name));
            }
            spec.readings.emplace(name, std::move(effects));
        }
        s.multiway = std::move(spec);
    }

    if (j.contains("input_state")) {
        const auto& in = j["input_state"];
        std::string type = require<std::string>(in, "type");
        if (type == "coherent") {
            s.input_state.kind = InputSpec::Kind::Coherent;
            if (in.contains("phase")) {
                s.input_state.phase = in["phase"].get<double>();
            }
        } else if (type == "mixture") {
            s.input_state.kind = InputSpec::Kind::Mixture;
        } else if (type == "explicit") {
            s.input_state.kind = InputSpec::Kind::Explicit;
            if (!in.contains("state")) {
                throw ScenarioError("input_state.state: missing");
            }
            s.input_state.explicit_state = matrix_spec_from_json(in["state"], "input_state.state");
        } else {
            throw ScenarioError("input_state.type: one of coherent|mixture|explicit");
        }
    }

    s.suites = require<std::vector<std::string>>(j, "suites");
    if (j.contains("weight_grid")) {
        for (const auto& pair : j["weight_grid"]) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ScenarioError("weight_grid: entries are [c1_sq, c2_sq] pairs");
            }
            s.weight_grid.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
    }
    if (j.contains("phase_count")) {
        s.phase_count = j["phase_count"].get<int>();
    }
    if (j.contains("axiom_samples")) {
        s.axiom_samples = j["axiom_samples"].get<int>();
    }
    if (j.contains("law_effects")) {
        s.law_effects = j["law_effects"].get<int>();
    }
    if (j.contains("reduction_samples")) {
        s.reduction_samples = j["reduction_samples"].get<int>();
    }
    if (j.contains("seed")) {
        s.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("trials")) {
        s.trials = j["trials"].get<long>();
    }
    if (j.contains("tolerance_scale")) {
        s.tolerance_scale = j["tolerance_scale"].get<double>();
        if (s.tolerance_scale <= 0.0) {
            throw ScenarioError("tolerance_scale: must be positive");
        }
    }

    // Domain validation: everything the suites will construct must build.
    ToleranceConfig scaled = tol.scaled(s.tolerance_scale);
    s.build_model(scaled);
    if (s.has_family()) {
        s.build_scenario(scaled);
        s.build_input_state(scaled);
    }
    if (s.has_multiway()) {
        s.build_multiway(scaled);
        if (!s.has_family() && s.input_state.kind != InputSpec::Kind::Explicit) {
            throw ScenarioError(
                "input_state: multiway scenarios without a family need an explicit input state");
        }
    }
    if (s.input_state.kind == InputSpec::Kind::Explicit) {
        s.build_input_state(scaled);
    }
    s.build_weight_grid(scaled);
    s.build_phase_grid();
    return s;
}

ScenarioFile generate_random_scenario(int object_dim, const std::vector<int>& probe_dims,
                                      std::uint64_t seed) {
    if (object_dim < 2) {
        throw ScenarioError("object_dim: must be at least 2");
    }
    if (probe_dims.empty()) {
        throw ScenarioError("probe_dims: at least one probe factor required");
    }
    for (int d : probe_dims) {
        if (d < 2) {
            throw ScenarioError("probe_dims: every factor dimension must be at least 2");
        }
    }
    Rng rng(seed);
    int probe_dim = product(probe_dims);
    int total = object_dim * probe_dim;

    ScenarioFile s;
    std::ostringstream name;
    name << "random-" << object_dim << "x" << probe_dim << "-seed" << seed;
    s.name = name.str();
    s.object_dim = object_dim;
    s.probe_dims = probe_dims;
    s.unitary_matrix = MatrixSpec::from_matrix(rng.haar_unitary(total)).matrix;
    s.probe_state = MatrixSpec::from_matrix(random_density_operator(probe_dim, rng).matrix());
    s.channels.push_back(ChannelSpec{"ch1", {0}});
    for (size_t f = 0; f < probe_dims.size(); ++f) {
        std::ostringstream ch;
        ch << "ch" << (f + 2);
        s.channels.push_back(ChannelSpec{ch.str(), {static_cast<int>(f + 1)}});
    }
    s.input_state =
        InputSpec{InputSpec::Kind::Explicit, 0.0,
                  MatrixSpec::from_matrix(random_density_operator(object_dim, rng).matrix())};
    s.suites = {"axioms", "discrimination", "probability_rule"};
    s.seed = seed;
    return s;
}

}  // namespace qmv
