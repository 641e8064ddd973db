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

#ifndef QMV_SCENARIO_HPP
#define QMV_SCENARIO_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qmv/theorems.hpp"

namespace qmv {

/// Operator or state given in a scenario file: exactly one of a dense
/// matrix (complex entries as [re, im] pairs), a ket (projector onto a pure
/// state), or a real diagonal.
struct MatrixSpec {
    std::optional<std::vector<std::vector<Complex>>> matrix;
    std::optional<std::vector<Complex>> ket;
    std::optional<std::vector<double>> diagonal;

    ComplexMatrix build(const std::string& field) const;

    static MatrixSpec from_matrix(const ComplexMatrix& m);
    static MatrixSpec from_ket(const ComplexVector& v);
    static MatrixSpec from_diagonal(std::vector<double> d);
};

struct ChannelSpec {
    std::string name;
    std::vector<int> factors;
};

/// The pair of orthogonal object states with weights and optional phase.
struct FamilySpec {
    MatrixSpec x1;
    MatrixSpec x2;
    double c1_sq = 0.5;
    double c2_sq = 0.5;
    std::optional<double> phase;
};

/// A family of mutually orthogonal states with one reading per state and
/// channel, for per-trial state identification.
struct MultiwaySpec {
    std::vector<MatrixSpec> states;
    std::map<std::string, std::vector<MatrixSpec>> readings;
};

/// The state verification and sampling run on: the coherent family member
/// at a fixed phase, the incoherent mixture, or an explicit operator.
struct InputSpec {
    enum class Kind { Coherent, Mixture, Explicit };
    Kind kind = Kind::Coherent;
    double phase = 0.0;
    std::optional<MatrixSpec> explicit_state;
};

/// Parsed scenario file. This is plain data; build_* turns it into live
/// model objects (and is where domain validation happens).
struct ScenarioFile {
    std::string name;
    int object_dim = 2;
    std::vector<int> probe_dims;
    std::string builtin_unitary;  ///< "cnot" | "qutrit-shift" | "" (explicit)
    std::optional<std::vector<std::vector<Complex>>> unitary_matrix;
    MatrixSpec probe_state;
    std::vector<ChannelSpec> channels;
    std::vector<int> unobserved_factors;
    std::optional<FamilySpec> family;
    std::map<std::string, MatrixSpec> discriminating_readings;
    std::optional<MultiwaySpec> multiway;
    InputSpec input_state;
    std::vector<std::string> suites;
    std::vector<std::array<double, 2>> weight_grid;
    int phase_count = 8;
    int axiom_samples = 50;
    int law_effects = 200;
    int reduction_samples = 100;
    std::uint64_t seed = 0;
    long trials = 100000;
    double tolerance_scale = 1.0;

    MeasurementModel build_model(const ToleranceConfig& tol = {}) const;
    SuperpositionFamily build_family(const ToleranceConfig& tol = {}) const;
    DiscriminationScenario build_scenario(const ToleranceConfig& tol = {}) const;
    MultiwayScenario build_multiway(const ToleranceConfig& tol = {}) const;
    DensityOperator build_input_state(const ToleranceConfig& tol = {}) const;
    std::vector<Weights> build_weight_grid(const ToleranceConfig& tol = {}) const;
    std::vector<double> build_phase_grid() const;

    bool has_family() const { return family.has_value(); }
    bool has_multiway() const { return multiway.has_value(); }
};

/// Controlled shift |i>|j> -> |i>|(i + j) mod d> on C^d (x) C^d; d = 2 is
/// the standard two-level copy interaction.
ComplexMatrix shift_unitary(int d);

/// Parse and fully validate a scenario: on success every build_* call will
/// succeed. Throws ScenarioError naming the offending field otherwise.
ScenarioFile parse_scenario(const std::string& text, const ToleranceConfig& tol = {});

/// Canonical JSON form; parse_scenario(serialize_scenario(s)) reproduces s.
std::string serialize_scenario(const ScenarioFile& s);

/// Scenario with a Haar-random unitary and random probe state over the given
/// dimensions. Only the axiom suite applies: there is no state family, so
/// discrimination-based suites skip with a notice. Dimensions must all be at
/// least 2.
ScenarioFile generate_random_scenario(int object_dim, const std::vector<int>& probe_dims,
                                      std::uint64_t seed);

}  // namespace qmv

#endif
