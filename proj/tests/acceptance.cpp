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
//
// End-to-end acceptance runs at desk scale: every check prints one pass/fail
// line; the process exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qmv/builtins.hpp"
#include "qmv/runner.hpp"

using namespace qmv;

namespace {

struct Criterion {
    std::string label;
    std::function<std::string()> run;  // empty string = pass, else failure detail
};

std::string fail(const std::string& msg) {
    return msg;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

Effect ket_effect(const ComplexVector& v) {
    return Effect(projector(v));
}

ComplexVector plus_ket() {
    return (basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0);
}

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const char* tmp = std::getenv("TMPDIR");
    std::string out_path = std::string(tmp ? tmp : "/tmp") + "/qmv_acceptance_out.txt";
    std::string cmd = std::string(QMV_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    CliRun run;
    run.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream text;
    text << in.rdbuf();
    run.output = text.str();
    return run;
}

// 1. Axioms on 200 random dilation models, 50 tuples each, within 60 s.
std::string criterion_axioms() {
    auto started = std::chrono::steady_clock::now();
    Rng dims_rng(20260811);
    double worst_axiom = 0.0, worst_eq60 = 0.0, worst_eq61 = 0.0;
    for (int k = 0; k < 200; ++k) {
        int object_dim = 2 + static_cast<int>(dims_rng.uniform() * 3);
        int probe_factors = 1 + static_cast<int>(dims_rng.uniform() * 3);
        std::vector<int> probe_dims;
        for (int f = 0; f < probe_factors; ++f) {
            probe_dims.push_back(2 + static_cast<int>(dims_rng.uniform() * 2));
        }
        ScenarioFile sf =
            generate_random_scenario(object_dim, probe_dims, 1000 + static_cast<std::uint64_t>(k));
        AxiomReport report = verify_axioms(sf.build_model(), 50, sf.seed);
        worst_axiom = std::max({worst_axiom, report.normalization, report.bounds,
                                report.state_affinity, report.observable_linearity,
                                report.marginal_independence, report.reading_linearity});
        worst_eq60 = std::max(worst_eq60, report.separability);
        worst_eq61 = std::max(worst_eq61, report.monotonicity);
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (worst_axiom > 1e-8) {
        return fail("axiom residual " + fmt(worst_axiom) + " > 1e-8");
    }
    if (worst_eq60 > 1e-8) {
        return fail("separability residual " + fmt(worst_eq60) + " > 1e-8");
    }
    if (worst_eq61 > 1e-9) {
        return fail("monotonicity violated by " + fmt(worst_eq61) + " > 1e-9");
    }
    if (seconds > 60.0) {
        return fail("runtime " + fmt(seconds) + " s > 60 s");
    }
    std::cerr << "       (200 models in " << seconds << " s; axiom max " << worst_axiom
              << ", separability max " << worst_eq60 << ")\n";
    return {};
}

// 2. Probability rule on cnot2 over the weight grid and 8 phases.
std::string criterion_probability_rule() {
    DiscriminationScenario sc = builtin_scenario("cnot2").build_scenario();
    SweepReport sweep =
        verify_probability_rule(sc, default_phase_grid(), default_weight_grid());
    if (sweep.max_residual > 1e-9) {
        return fail("max residual " + fmt(sweep.max_residual) + " > 1e-9 at " +
                    sweep.worst_witness);
    }
    // Worked value at the 3-4-5 weights.
    SuperpositionFamily f345 = sc.fam.with_weights(Weights(0.36, 0.64));
    ReadingSet mu;
    mu.readings.emplace("ch2", sc.discriminating.at("ch2"));
    for (double phase : default_phase_grid()) {
        double m = coincidence_probability(sc.model, mu, coherent(f345, phase));
        if (std::abs(m - 0.36) > 1e-9) {
            return fail("worked value m = " + fmt(m) + " != 0.36 at phase " + fmt(phase));
        }
    }
    return {};
}

// 3. State reduction on cnot2: 100 random object readings across 8 phases.
std::string criterion_state_reduction() {
    DiscriminationScenario sc = builtin_scenario("cnot2").build_scenario();
    Rng rng(345);
    std::vector<ReadingSet> observations;
    for (int i = 0; i < 100; ++i) {
        ReadingSet rs;
        rs.readings.emplace("ch1", random_effect(2, rng));
        observations.push_back(rs);
    }
    StateReductionReport report =
        verify_state_reduction(sc, observations, default_phase_grid());
    if (report.coincidence.max_residual > 1e-8) {
        return fail("coincidence residual " + fmt(report.coincidence.max_residual) + " > 1e-8");
    }
    if (report.marginal.max_residual > 1e-8) {
        return fail("marginal residual " + fmt(report.marginal.max_residual) + " > 1e-8");
    }
    ReadingSet tilted;
    tilted.readings.emplace("ch1", ket_effect(plus_ket()));
    for (double phase : default_phase_grid()) {
        double m = coincidence_probability(sc.model, tilted, coherent(sc.fam, phase));
        if (std::abs(m - 0.5) > 1e-8) {
            return fail("tilted reading gave " + fmt(m) + " != 0.5 at phase " + fmt(phase));
        }
    }
    return {};
}

// 4. Objectivity on cnot2 and cnot3: vanishing disagreement, equal marginals.
std::string criterion_objectivity() {
    for (const char* name : {"cnot2", "cnot3"}) {
        DiscriminationScenario sc = builtin_scenario(name).build_scenario();
        ObjectivityReport report =
            verify_objectivity(sc, default_phase_grid(), default_weight_grid());
        if (report.disagreement.max_residual > 1e-9) {
            return fail(std::string(name) + ": disagreement " +
                        fmt(report.disagreement.max_residual) + " > 1e-9");
        }
        if (report.agreement.max_residual > 3e-9) {
            return fail(std::string(name) + ": marginal equality off by " +
                        fmt(report.agreement.max_residual) + " > 3e-9");
        }
    }
    return {};
}

// 5. Objective-event sampler through the CLI, deterministic across runs.
std::string criterion_sampler() {
    CliRun first = run_cli("sample cnot2 --trials 100000 --seed 42");
    if (first.exit_code != 0) {
        return fail("CLI exited with " + std::to_string(first.exit_code));
    }
    CliRun second = run_cli("sample cnot2 --trials 100000 --seed 42");
    if (first.output != second.output) {
        return fail("two runs with the same seed produced different reports");
    }
    nlohmann::json j = nlohmann::json::parse(first.output);
    const auto& details = j.at("suites").at(0).at("details");
    double disagreements = details.at("disagreements").get<double>();
    double freq = details.at("frequency_e1").get<double>();
    if (disagreements != 0.0) {
        return fail(fmt(disagreements) + " disagreeing trials");
    }
    double sigma = std::sqrt(0.36 * 0.64 / 100000.0);
    if (std::abs(freq - 0.36) > 3 * sigma) {
        return fail("frequency " + fmt(freq) + " outside 0.36 +- " + fmt(3 * sigma));
    }
    std::cerr << "       (frequency " << freq << ", sigma " << sigma << ")\n";
    return {};
}

// 6. Negative control: the corrupted scenario must fail loudly.
std::string criterion_negative_control() {
    DiscriminationScenario broken = builtin_scenario("cnot2-corrupted").build_scenario();
    DiscriminationCheck check = check_discrimination(
        broken.model, broken.fam, "ch2", broken.discriminating.at("ch2"));
    if (check.ok) {
        return fail("corrupted reading passed discrimination");
    }
    if (std::abs(check.r1 - 0.5) > 1e-9 || std::abs(check.r2 - 0.5) > 1e-9) {
        return fail("expected residuals 0.5, got " + fmt(check.r1) + " and " + fmt(check.r2));
    }
    CliRun sampled = run_cli("sample cnot2-corrupted --trials 100000 --seed 42");
    if (sampled.exit_code != 1) {
        return fail("corrupted sample run exited with " + std::to_string(sampled.exit_code) +
                    ", expected 1");
    }
    nlohmann::json j = nlohmann::json::parse(sampled.output);
    double freq = j.at("suites").at(0).at("details").at("disagreement_frequency").get<double>();
    double sigma = std::sqrt(0.5 * 0.5 / 100000.0);
    if (std::abs(freq - 0.5) > 3 * sigma) {
        return fail("disagreement frequency " + fmt(freq) + " outside 0.5 +- " + fmt(3 * sigma));
    }
    return {};
}

// 7. Induced observable reproduces the coincidence functional.
std::string criterion_induced_effect() {
    DiscriminationScenario sc = builtin_scenario("cnot2").build_scenario();
    Rng rng(777);
    const auto names = sc.model.channel_layout().channel_names();
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        ReadingSet rs;
        for (const auto& name : names) {
            if (rng.uniform() < 0.5) {
                rs.readings.emplace(name, random_effect(2, rng));
            }
        }
        Effect f = induced_effect(sc.model, rs);  // Effect invariants enforced here
        for (int s = 0; s < 50; ++s) {
            DensityOperator x = random_density_operator(2, rng);
            worst = std::max(worst, std::abs(probability(f, x) -
                                             coincidence_probability(sc.model, rs, x)));
        }
    }
    if (worst > 1e-8) {
        return fail("identity residual " + fmt(worst) + " > 1e-8");
    }
    return {};
}

// 8. Prepared output states of the copy model.
std::string criterion_output_states() {
    ScenarioFile sf = builtin_scenario("cnot2");
    DiscriminationScenario sc = sf.build_scenario();
    DensityOperator x = sf.build_input_state();

    ComplexMatrix expected = zeros(2, 2);
    expected(0, 0) = 0.36;
    expected(1, 1) = 0.64;
    double d_unc = frobenius_distance(output_state(sc.model, "ch1", x).matrix(), expected);
    if (d_unc > 1e-9) {
        return fail("unconditional output off by " + fmt(d_unc));
    }
    DensityOperator cond =
        conditional_output_state(sc.model, "ch1", "ch2", ket_effect(basis_ket(2, 1)), x);
    double d_cond = frobenius_distance(cond.matrix(), projector(basis_ket(2, 1)));
    if (d_cond > 1e-9) {
        return fail("conditional output off by " + fmt(d_cond));
    }
    return {};
}

// 9. Consistency sweep over the 12-element dictionary per channel.
std::string criterion_consistency() {
    DiscriminationScenario sc = builtin_scenario("cnot2").build_scenario();
    auto phases = default_phase_grid();
    auto dict = effect_dictionary(2);
    if (dict.size() != 12) {
        return fail("dictionary has " + std::to_string(dict.size()) + " entries, wanted 12");
    }
    long counterexamples = 0;
    for (const Effect& a1 : dict) {
        for (const Effect& a2 : dict) {
            ReadingSet factors;
            factors.readings.emplace("ch1", a1);
            factors.readings.emplace("ch2", a2);
            ConsistencyReport r = consistency_analysis(sc, factors, phases);
            if (!r.implication_holds) {
                ++counterexamples;
            }
        }
    }
    if (counterexamples != 0) {
        return fail(std::to_string(counterexamples) + " counterexamples in the product sweep");
    }
    ReadingSet both_plus;
    both_plus.readings.emplace("ch1", ket_effect(plus_ket()));
    both_plus.readings.emplace("ch2", ket_effect(plus_ket()));
    ConsistencyReport r = consistency_analysis(sc, both_plus, phases);
    if (!r.sensitive) {
        return fail("doubly tilted product reading not flagged sensitive");
    }
    if (std::abs(r.m_min - 0.01) > 1e-8 || std::abs(r.m_max - 0.49) > 1e-8) {
        return fail("phase range [" + fmt(r.m_min) + ", " + fmt(r.m_max) +
                    "] != [0.01, 0.49]");
    }
    return {};
}

// 10. Multiway filter at the 0.2/0.3/0.5 mixture.
std::string criterion_multiway() {
    ScenarioFile sf = builtin_scenario("qutrit3");
    MultiwayScenario mw = sf.build_multiway();
    DensityOperator x = sf.build_input_state();
    MultiwayRun run;
    try {
        run = multiway_filter(mw, x, 100000, 42);
    } catch (const InconsistencyError& e) {
        return fail(std::string("cross-channel inconsistency: ") + e.what());
    }
    std::vector<double> w{0.2, 0.3, 0.5};
    for (size_t i = 0; i < w.size(); ++i) {
        double freq = static_cast<double>(run.counts[i]) / 100000.0;
        double sigma = std::sqrt(w[i] * (1 - w[i]) / 100000.0);
        if (std::abs(freq - w[i]) > 3 * sigma) {
            return fail("index " + std::to_string(i) + " frequency " + fmt(freq) +
                        " outside " + fmt(w[i]) + " +- " + fmt(3 * sigma));
        }
    }
    return {};
}

// 11. Superposition membership decisions and the defining law.
std::string criterion_membership() {
    DiscriminationScenario sc = builtin_scenario("cnot2").build_scenario();
    double worst_law = 0.0;
    for (const Weights& w : default_weight_grid()) {
        SuperpositionFamily fam = sc.fam.with_weights(w);
        DensityOperator mixture = mix(w, fam.x1(), fam.x2());
        DensityOperator member = coherent(fam);
        if (!is_member(mixture, fam).member) {
            return fail("mixture rejected at w=(" + fmt(w.c1_sq) + "," + fmt(w.c2_sq) + ")");
        }
        if (!is_member(member, fam).member) {
            return fail("coherent member rejected at w=(" + fmt(w.c1_sq) + "," + fmt(w.c2_sq) +
                        ")");
        }
        worst_law = std::max(worst_law,
                             check_superposition_law(mixture, fam, 200, 4242).max_residual);
        worst_law = std::max(worst_law,
                             check_superposition_law(member, fam, 200, 4242).max_residual);
    }
    SuperpositionFamily balanced = sc.fam.with_weights(Weights(0.5, 0.5));
    if (is_member(balanced.x1(), balanced).member) {
        return fail("bare component accepted under balanced weights");
    }
    if (worst_law > 1e-8) {
        return fail("law residual " + fmt(worst_law) + " > 1e-8");
    }
    return {};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"axiom suite on 200 random dilation models", criterion_axioms},
        {"probability rule on cnot2", criterion_probability_rule},
        {"state reduction on cnot2", criterion_state_reduction},
        {"objectivity on cnot2 and cnot3", criterion_objectivity},
        {"objective-event sampler (CLI, 100k trials, seed 42)", criterion_sampler},
        {"negative control: corrupted reading detected", criterion_negative_control},
        {"induced observable matches the functional", criterion_induced_effect},
        {"prepared output states of the copy model", criterion_output_states},
        {"consistency sweep over product readings", criterion_consistency},
        {"multiway filter at weights 0.2/0.3/0.5", criterion_multiway},
        {"superposition membership and defining law", criterion_membership},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        try {
            detail = criteria[i].run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].label << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].label << " -- "
                      << detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures;
}
