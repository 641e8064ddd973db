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

#include <doctest.h>

#include "qmv/builtins.hpp"
#include "qmv/runner.hpp"
#include "support.hpp"

using namespace qmv;
using namespace qmv::testing;

TEST_CASE("builtin scenarios parse, build and round-trip") {
    for (const auto& name : builtin_scenario_names()) {
        ScenarioFile sf = builtin_scenario(name);
        std::string text = serialize_scenario(sf);
        ScenarioFile parsed = parse_scenario(text);
        CHECK(serialize_scenario(parsed) == text);
        CHECK(parsed.name == name);
        CHECK_NOTHROW(parsed.build_model());
    }
}

TEST_CASE("builtin cnot2 resolves to the copy model with a ground probe") {
    ScenarioFile sf = builtin_scenario("cnot2");
    MeasurementModel model = sf.build_model();
    CHECK(approx_equal(model.unitary(), shift_unitary(2)));
    CHECK(approx_equal(model.probe_state().matrix(), projector(basis_ket(2, 0))));
    CHECK(model.channel_layout().channel_names() ==
          std::vector<std::string>{"ch1", "ch2"});
}

TEST_CASE("scenario rejection: identical family states") {
    ScenarioFile sf = builtin_scenario("cnot2");
    sf.family->x2 = sf.family->x1;
    CHECK_THROWS_AS(parse_scenario(serialize_scenario(sf)), ScenarioError);
    try {
        parse_scenario(serialize_scenario(sf));
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("orthogonal") != std::string::npos);
    }
}

TEST_CASE("scenario rejection: explicit unitary with a stretched row") {
    ScenarioFile sf = builtin_scenario("cnot2");
    ComplexMatrix bad = shift_unitary(2);
    bad.row(0) *= 1.1;
    sf.builtin_unitary.clear();
    sf.unitary_matrix = MatrixSpec::from_matrix(bad).matrix;
    CHECK_THROWS_AS(parse_scenario(serialize_scenario(sf)), ScenarioError);
    try {
        parse_scenario(serialize_scenario(sf));
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("unitar") != std::string::npos);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
}

TEST_CASE("scenario rejection: malformed documents") {
    CHECK_THROWS_AS(parse_scenario("not json at all"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("{}"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("[1,2,3]"), ScenarioError);

    ScenarioFile sf = builtin_scenario("cnot2");
    sf.object_dim = 1;
    CHECK_THROWS_AS(parse_scenario(serialize_scenario(sf)), ScenarioError);

    sf = builtin_scenario("cnot2");
    sf.suites = {"no_such_suite"};
    ScenarioFile parsed = parse_scenario(serialize_scenario(sf));
    CHECK_THROWS_AS(run_verification(parsed), ScenarioError);

    // A filter scenario must say what state the trials run on.
    sf = builtin_scenario("qutrit3");
    sf.input_state = InputSpec{};
    CHECK_THROWS_AS(parse_scenario(serialize_scenario(sf)), ScenarioError);
}

TEST_CASE("verification report: builtin passes and serialization is stable") {
    ScenarioFile sf = builtin_scenario("cnot2");
    sf.axiom_samples = 10;
    sf.reduction_samples = 10;
    sf.law_effects = 40;
    VerificationReport report = run_verification(sf);
    CHECK(report.all_pass());
    CHECK(report.suites.size() == sf.suites.size());

    VerificationReport again = run_verification(sf);
    CHECK(report.to_json() == again.to_json());
    CHECK(report.to_text() == again.to_text());
}

TEST_CASE("corrupted builtin fails its suites") {
    ScenarioFile sf = builtin_scenario("cnot2-corrupted");
    VerificationReport report = run_verification(sf);
    CHECK(!report.all_pass());

    bool discrimination_failed = false;
    bool objectivity_failed = false;
    for (const auto& suite : report.suites) {
        if (suite.name == "discrimination" && !suite.pass) {
            discrimination_failed = true;
            CHECK(suite.details.at("ch2.r1") == doctest::Approx(0.5));
            CHECK(suite.details.at("ch2.r2") == doctest::Approx(0.5));
        }
        if (suite.name == "objectivity" && !suite.pass) {
            objectivity_failed = true;
        }
    }
    CHECK(discrimination_failed);
    CHECK(objectivity_failed);
}

TEST_CASE("sampler report carries frequencies and bands") {
    ScenarioFile sf = builtin_scenario("cnot2");
    VerificationReport report = run_sampler(sf, 20000);
    REQUIRE(report.suites.size() == 1);
    const SuiteResult& s = report.suites.front();
    CHECK(s.pass);
    CHECK(s.details.at("disagreements") == 0.0);
    CHECK(s.details.at("expected_e1") == doctest::Approx(0.36));

    VerificationReport again = run_sampler(sf, 20000);
    CHECK(report.to_json() == again.to_json());
}

TEST_CASE("random scenarios: axioms pass, separability over extra channels") {
    ScenarioFile one_probe = generate_random_scenario(2, {2}, 11);
    VerificationReport r1 = run_verification(one_probe);
    bool axioms_seen = false;
    for (const auto& suite : r1.suites) {
        if (suite.name == "axioms") {
            axioms_seen = true;
            CHECK(suite.pass);
        } else {
            // No family: discrimination-based suites must skip, not fail.
            CHECK(suite.skipped);
        }
    }
    CHECK(axioms_seen);

    ScenarioFile two_probes = generate_random_scenario(2, {2, 2}, 12);
    MeasurementModel model = two_probes.build_model();
    ToleranceConfig tol;
    AxiomReport axioms = verify_axioms(model, 100, 99, tol);
    CHECK(axioms.separability <= tol.prob);

    CHECK_THROWS_AS(generate_random_scenario(1, {2}, 13), ScenarioError);
}

TEST_CASE("random scenarios round-trip through text") {
    ScenarioFile sf = generate_random_scenario(3, {2, 3}, 21);
    std::string text = serialize_scenario(sf);
    ScenarioFile parsed = parse_scenario(text);
    CHECK(serialize_scenario(parsed) == text);
    CHECK(approx_equal(parsed.build_model().unitary(), sf.build_model().unitary(), 0.0));
}

TEST_CASE("fuzz runner aggregates axiom results") {
    VerificationReport report = run_fuzz(2, {2}, 3, 400);
    CHECK(report.suites.size() == 3);
    CHECK(report.all_pass());
}

#ifdef QMV_CLI_PATH
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string stdout_text;
};

CommandResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/qmv_cli_out.txt";
    std::string cmd = std::string(QMV_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    CommandResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream text;
    text << in.rdbuf();
    result.stdout_text = text.str();
    return result;
}

}  // namespace

TEST_CASE("cli: verify exit codes and deterministic output") {
    CommandResult good = run_cli("verify cnot2");
    CHECK(good.exit_code == 0);
    CHECK(good.stdout_text.find("\"pass\": true") != std::string::npos);

    CommandResult again = run_cli("verify cnot2");
    CHECK(again.stdout_text == good.stdout_text);

    CommandResult bad = run_cli("verify cnot2-corrupted");
    CHECK(bad.exit_code == 1);

    CommandResult missing = run_cli("verify /nonexistent/scenario.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("shipped scenario files stay in sync with the builtins") {
    for (const auto& name : builtin_scenario_names()) {
        std::ifstream in(std::string(QMV_SCENARIO_DIR) + "/" + name + ".json");
        REQUIRE(in.good());
        std::ostringstream text;
        text << in.rdbuf();
        CHECK(text.str() == serialize_scenario(builtin_scenario(name)));
    }
}

TEST_CASE("cli: sample raises on the corrupted scenario and text format renders") {
    CommandResult sample = run_cli("sample cnot2 --trials 2000");
    CHECK(sample.exit_code == 0);

    CommandResult broken = run_cli("sample cnot2-corrupted --trials 2000");
    CHECK(broken.exit_code == 1);

    CommandResult text = run_cli("--format text verify cnot2");
    CHECK(text.exit_code == 0);
    CHECK(text.stdout_text.find("RESULT: pass") != std::string::npos);
}
#endif
