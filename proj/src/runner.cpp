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

#include "qmv/runner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qmv {

namespace {

SuiteResult skipped(const std::string& name, const std::string& reason) {
    SuiteResult r;
    r.name = name;
    r.skipped = true;
    r.skip_reason = reason;
    return r;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

// --------------------------------------------------------------------------
// Individual suites
// --------------------------------------------------------------------------

SuiteResult axioms_suite(const MeasurementModel& model, int samples, std::uint64_t seed,
                         const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "axioms";
    AxiomReport report = verify_axioms(model, samples, seed, tol);
    r.details = report.as_map();
    auto [worst_name, worst_value] = report.worst();
    r.max_residual = worst_value;
    r.worst_witness = "axiom " + worst_name;
    r.tolerance = tol.prob;
    r.checks = report.samples;
    r.pass = report.pass(tol);
    if (!report.pair_checks_run) {
        r.notes.push_back("single channel: separability checks not applicable");
    }
    r.notes.push_back("monotonicity threshold " + fmt(tol.psd));
    return r;
}

SuiteResult discrimination_suite_binary(const DiscriminationScenario& scenario,
                                        const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "discrimination";
    r.tolerance = tol.disc;
    for (const auto& [name, a] : scenario.discriminating) {
        DiscriminationCheck check = check_discrimination(scenario.model, scenario.fam, name, a, tol);
        r.details[name + ".r1"] = check.r1;
        r.details[name + ".r2"] = check.r2;
        double worst = std::max(check.r1, check.r2);
        if (worst > r.max_residual) {
            r.max_residual = worst;
            r.worst_witness = "reading on " + name;
        }
        // The complemented reading discriminates the other way round.
        DiscriminationCheck swapped =
            check_discrimination(scenario.model, scenario.fam, name, complement(a, tol), tol);
        double comp_worst = std::max(std::abs(swapped.r1 - 1.0), std::abs(swapped.r2 - 1.0));
        // For the complement, m(bar A; x1) = 0 and m(bar A; x2) = 1, i.e.
        // r1 ~ 1 and r2 ~ 1 in the original orientation.
        r.details[name + ".complement"] = comp_worst;
        if (comp_worst > r.max_residual) {
            r.max_residual = comp_worst;
            r.worst_witness = "complement reading on " + name;
        }
        r.checks += 2;
    }
    r.pass = r.max_residual <= tol.disc;
    return r;
}

SuiteResult discrimination_suite_multiway(const MultiwayScenario& mw, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "discrimination";
    r.tolerance = tol.disc;
    const int n = static_cast<int>(mw.states.size());
    for (const auto& [name, per_state] : mw.readings) {
        double channel_worst = 0.0;
        for (int i = 0; i < n && i < static_cast<int>(per_state.size()); ++i) {
            ReadingSet rs;
            rs.readings.emplace(name, per_state[static_cast<size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                double m = coincidence_probability(mw.model, rs,
                                                   mw.states[static_cast<size_t>(j)], tol);
                double target = (i == j) ? 1.0 : 0.0;
                double res = std::abs(m - target);
                channel_worst = std::max(channel_worst, res);
                if (res > r.max_residual) {
                    r.max_residual = res;
                    std::ostringstream w;
                    w << "reading " << i << " of " << name << " on state " << j;
                    r.worst_witness = w.str();
                }
                ++r.checks;
            }
        }
        r.details[name] = channel_worst;
    }
    r.pass = r.max_residual <= tol.disc;
    return r;
}

SuiteResult probability_rule_suite(const DiscriminationScenario& scenario,
                                   const std::vector<double>& phases,
                                   const std::vector<Weights>& grid, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "probability_rule";
    SweepReport sweep = verify_probability_rule(scenario, phases, grid, tol);
    r.max_residual = sweep.max_residual;
    r.worst_witness = sweep.worst_witness;
    r.checks = sweep.checks;
    r.tolerance = tol.prob;
    r.pass = sweep.max_residual <= tol.prob;
    return r;
}

SuiteResult state_reduction_suite(const DiscriminationScenario& scenario,
                                  const std::vector<double>& phases, int samples,
                                  std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "state_reduction";
    // Arbitrary observations per channel: the per-dimension dictionary plus
    // seeded random effects, each tested against every discriminating
    // channel it excludes.
    std::vector<ReadingSet> observations;
    Rng rng(seed);
    for (const auto& name : scenario.model.channel_layout().channel_names()) {
        int d = scenario.model.channel_layout().channel_dim(name);
        for (const Effect& e : effect_dictionary(d, tol)) {
            ReadingSet rs;
            rs.readings.emplace(name, e);
            observations.push_back(std::move(rs));
        }
        for (int i = 0; i < samples; ++i) {
            ReadingSet rs;
            rs.readings.emplace(name, random_effect(d, rng, tol));
            observations.push_back(std::move(rs));
        }
    }
    StateReductionReport report = verify_state_reduction(scenario, observations, phases, tol);
    r.details["coincidence"] = report.coincidence.max_residual;
    r.details["marginal"] = report.marginal.max_residual;
    if (report.coincidence.max_residual >= report.marginal.max_residual) {
        r.max_residual = report.coincidence.max_residual;
        r.worst_witness = report.coincidence.worst_witness;
    } else {
        r.max_residual = report.marginal.max_residual;
        r.worst_witness = report.marginal.worst_witness;
    }
    r.checks = report.coincidence.checks + report.marginal.checks;
    r.tolerance = tol.prob;
    r.pass = r.max_residual <= tol.prob;
    return r;
}

SuiteResult objectivity_suite(const DiscriminationScenario& scenario,
                              const std::vector<double>& phases,
                              const std::vector<Weights>& grid, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "objectivity";
    ObjectivityReport report = verify_objectivity(scenario, phases, grid, tol);
    r.details["disagreement"] = report.disagreement.max_residual;
    r.details["agreement"] = report.agreement.max_residual;
    if (report.disagreement.max_residual >= report.agreement.max_residual) {
        r.max_residual = report.disagreement.max_residual;
        r.worst_witness = report.disagreement.worst_witness;
    } else {
        r.max_residual = report.agreement.max_residual;
        r.worst_witness = report.agreement.worst_witness;
    }
    r.checks = report.disagreement.checks + report.agreement.checks;
    r.tolerance = tol.prob;
    r.pass = report.disagreement.max_residual <= tol.prob &&
             report.agreement.max_residual <= 3.0 * tol.prob;
    return r;
}

SuiteResult membership_suite(const DiscriminationScenario& scenario,
                             const std::vector<Weights>& grid, int law_effects,
                             std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "membership";
    r.tolerance = tol.prob;
    bool decisions_ok = true;
    bool pure = scenario.fam.x1().is_pure(tol) && scenario.fam.x2().is_pure(tol);

    for (const Weights& w : grid) {
        SuperpositionFamily fam = scenario.fam.with_weights(w, tol);
        std::vector<std::pair<DensityOperator, std::string>> members;
        members.emplace_back(mix(w, fam.x1(), fam.x2(), tol), "mixture");
        if (pure) {
            members.emplace_back(coherent(fam, tol), "coherent");
        }
        for (const auto& [x, tag] : members) {
            MembershipResult mem = is_member(x, fam, tol);
            if (!mem.member) {
                decisions_ok = false;
                r.worst_witness = tag + " rejected at " + fmt(w.c1_sq) + "/" + fmt(w.c2_sq);
            }
            SuperpositionLawReport law =
                check_superposition_law(x, fam, law_effects, seed, tol);
            r.checks += law.effects_checked;
            if (law.max_residual > r.max_residual) {
                r.max_residual = law.max_residual;
                r.worst_witness = tag + " at w=(" + fmt(w.c1_sq) + "," + fmt(w.c2_sq) + "): " +
                                  law.worst_witness;
            }
        }
        // Negative control: a bare component is not a member once the other
        // component carries real weight.
        if (w.c2_sq >= 0.25) {
            MembershipResult neg = is_member(fam.x1(), fam, tol);
            ++r.checks;
            if (neg.member) {
                decisions_ok = false;
                r.worst_witness =
                    "x1 wrongly accepted at w=(" + fmt(w.c1_sq) + "," + fmt(w.c2_sq) + ")";
            }
        }
    }
    r.details["law_max_residual"] = r.max_residual;
    r.pass = decisions_ok && r.max_residual <= tol.prob;
    if (!decisions_ok) {
        r.notes.push_back("membership decision wrong for at least one grid point");
    }
    return r;
}

SuiteResult consistency_suite(const DiscriminationScenario& scenario,
                              const std::vector<double>& phases, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "consistency";
    const auto names = scenario.model.channel_layout().channel_names();

    std::vector<std::vector<Effect>> dicts;
    for (const auto& name : names) {
        dicts.push_back(effect_dictionary(scenario.model.channel_layout().channel_dim(name), tol));
    }

    long combos = 1;
    for (const auto& d : dicts) {
        combos *= static_cast<long>(d.size());
    }
    long sensitive_count = 0;
    long counterexamples = 0;
    for (long c = 0; c < combos; ++c) {
        long rest = c;
        ReadingSet factors;
        for (size_t pos = 0; pos < names.size(); ++pos) {
            size_t idx = static_cast<size_t>(rest % static_cast<long>(dicts[pos].size()));
            rest /= static_cast<long>(dicts[pos].size());
            factors.readings.emplace(names[pos], dicts[pos][idx]);
        }
        ConsistencyReport report = consistency_analysis(scenario, factors, phases, tol);
        if (report.sensitive) {
            ++sensitive_count;
        }
        if (!report.implication_holds) {
            ++counterexamples;
            r.worst_witness = "product effect combo #" + std::to_string(c);
        }
        ++r.checks;
    }
    r.details["combos"] = static_cast<double>(combos);
    r.details["sensitive"] = static_cast<double>(sensitive_count);
    r.details["counterexamples"] = static_cast<double>(counterexamples);
    r.max_residual = static_cast<double>(counterexamples);
    r.tolerance = 0.0;
    r.pass = counterexamples == 0;
    r.notes.push_back("claim: sensitivity requires a nonzero off-diagonal factor on every channel");
    return r;
}

SuiteResult induced_observable_suite(const DiscriminationScenario& scenario, int reading_sets,
                                     int states, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "induced_observable";
    r.tolerance = tol.prob;
    Rng rng(seed);
    const auto names = scenario.model.channel_layout().channel_names();
    for (int k = 0; k < reading_sets; ++k) {
        ReadingSet rs;
        if (k > 0) {  // k == 0 probes the empty reading set: F must be I
            for (const auto& name : names) {
                if (rng.uniform() < 0.5 || (rs.readings.empty() && name == names.back())) {
                    rs.readings.emplace(
                        name,
                        random_effect(scenario.model.channel_layout().channel_dim(name), rng, tol));
                }
            }
        }
        Effect f = induced_effect(scenario.model, rs, tol);
        for (int s = 0; s < states; ++s) {
            DensityOperator x = random_density_operator(scenario.model.object_dim(), rng, tol);
            double direct = coincidence_probability(scenario.model, rs, x, tol);
            double induced = probability(f, x);
            double res = std::abs(direct - induced);
            ++r.checks;
            if (res > r.max_residual) {
                r.max_residual = res;
                std::ostringstream w;
                w << "reading set #" << k << " state #" << s;
                r.worst_witness = w.str();
            }
        }
    }
    r.pass = r.max_residual <= tol.prob;
    return r;
}

SuiteResult output_states_suite(const DiscriminationScenario& scenario, const DensityOperator& x,
                                int probes, std::uint64_t seed, const ToleranceConfig& tol) {
    SuiteResult r;
    r.name = "output_states";
    r.tolerance = tol.prob;
    Rng rng(seed);
    const auto names = scenario.model.channel_layout().channel_names();

    for (const auto& out : names) {
        int d = scenario.model.channel_layout().channel_dim(out);
        DensityOperator prepared = output_state(scenario.model, out, x, tol);
        for (int k = 0; k < probes; ++k) {
            Effect a = random_effect(d, rng, tol);
            ReadingSet rs;
            rs.readings.emplace(out, a);
            double res =
                std::abs(probability(a, prepared) - coincidence_probability(scenario.model, rs, x, tol));
            ++r.checks;
            if (res > r.max_residual) {
                r.max_residual = res;
                r.worst_witness = "unconditional output on " + out;
            }
        }
        // Conditional preparation, selected on another channel's reading.
        for (const auto& sel : names) {
            if (sel == out) {
                continue;
            }
            std::vector<Effect> selections;
            auto it = scenario.discriminating.find(sel);
            if (it != scenario.discriminating.end()) {
                selections.push_back(it->second);
            }
            selections.push_back(
                random_effect(scenario.model.channel_layout().channel_dim(sel), rng, tol));
            for (const Effect& a_sel : selections) {
                ReadingSet sel_only;
                sel_only.readings.emplace(sel, a_sel);
                double p_sel = coincidence_probability(scenario.model, sel_only, x, tol);
                if (p_sel <= 1e-6) {
                    continue;  // selection too rare to probe meaningfully
                }
                DensityOperator prepared_cond =
                    conditional_output_state(scenario.model, out, sel, a_sel, x, tol);
                for (int k = 0; k < probes; ++k) {
                    Effect a = random_effect(d, rng, tol);
                    ReadingSet joint = sel_only.with(out, a);
                    double expected =
                        coincidence_probability(scenario.model, joint, x, tol) / p_sel;
                    double res = std::abs(probability(a, prepared_cond) - expected);
                    ++r.checks;
                    if (res > r.max_residual) {
                        r.max_residual = res;
                        r.worst_witness = "conditional output on " + out + " given " + sel;
                    }
                }
            }
        }
    }
    r.pass = r.max_residual <= tol.prob;
    return r;
}

}  // namespace

std::vector<Effect> effect_dictionary(int dim, const ToleranceConfig& tol) {
    std::vector<Effect> dict;
    dict.push_back(Effect::zero_effect(dim));
    dict.push_back(Effect::identity_effect(dim));
    dict.push_back(Effect(0.5 * identity(dim), tol));
    for (int i = 0; i < dim; ++i) {
        dict.push_back(Effect(projector(basis_ket(dim, i)), tol));
    }
    if (dim == 2) {
        ComplexVector plus = basis_ket(2, 0) + basis_ket(2, 1);
        ComplexVector minus = basis_ket(2, 0) - basis_ket(2, 1);
        ComplexVector plus_i = basis_ket(2, 0) + Complex(0, 1) * basis_ket(2, 1);
        ComplexVector minus_i = basis_ket(2, 0) - Complex(0, 1) * basis_ket(2, 1);
        dict.push_back(Effect(projector(plus), tol));
        dict.push_back(Effect(projector(minus), tol));
        dict.push_back(Effect(projector(plus_i), tol));
        dict.push_back(Effect(projector(minus_i), tol));
        dict.push_back(Effect(0.7 * projector(plus), tol));
        ComplexMatrix diag = zeros(2, 2);
        diag(0, 0) = 0.3;
        diag(1, 1) = 0.2;
        dict.push_back(Effect(diag, tol));
        dict.push_back(Effect(0.8 * projector(basis_ket(2, 0)) + 0.3 * projector(plus), tol));
    } else {
        for (int i = 0; i + 1 < dim; ++i) {
            dict.push_back(Effect(projector(basis_ket(dim, i) + basis_ket(dim, i + 1)), tol));
            dict.push_back(Effect(
                projector(basis_ket(dim, i) + Complex(0, 1) * basis_ket(dim, i + 1)), tol));
        }
    }
    return dict;
}

VerificationReport run_verification(const ScenarioFile& scenario,
                                    std::optional<std::uint64_t> seed_override,
                                    std::optional<double> tolerance_scale_override,
                                    const ToleranceConfig& base_tol) {
    VerificationReport rep;
    rep.scenario_name = scenario.name;
    rep.seed = seed_override.value_or(scenario.seed);
    rep.tolerance_scale = tolerance_scale_override.value_or(scenario.tolerance_scale);
    ToleranceConfig tol = base_tol.scaled(rep.tolerance_scale);

    MeasurementModel model = scenario.build_model(tol);
    std::optional<DiscriminationScenario> disc;
    if (scenario.has_family()) {
        disc = scenario.build_scenario(tol);
    }
    std::optional<MultiwayScenario> mw;
    if (scenario.has_multiway()) {
        mw = scenario.build_multiway(tol);
    }
    std::vector<double> phases = scenario.build_phase_grid();
    std::vector<Weights> grid = scenario.build_weight_grid(tol);

    const std::string no_family =
        "scenario provides no discrimination premises (state family and readings)";

    for (const auto& suite : scenario.suites) {
        if (suite == "axioms") {
            rep.suites.push_back(axioms_suite(model, scenario.axiom_samples, rep.seed, tol));
        } else if (suite == "discrimination") {
            if (disc && !disc->discriminating.empty()) {
                rep.suites.push_back(discrimination_suite_binary(*disc, tol));
            } else if (mw) {
                rep.suites.push_back(discrimination_suite_multiway(*mw, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "probability_rule") {
            if (disc && !disc->discriminating.empty()) {
                rep.suites.push_back(probability_rule_suite(*disc, phases, grid, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "state_reduction") {
            if (disc && !disc->discriminating.empty()) {
                rep.suites.push_back(state_reduction_suite(*disc, phases,
                                                           scenario.reduction_samples, rep.seed,
                                                           tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "objectivity") {
            if (disc && disc->discriminating.size() >= 2) {
                rep.suites.push_back(objectivity_suite(*disc, phases, grid, tol));
            } else {
                rep.suites.push_back(
                    skipped(suite, disc ? "fewer than two discriminating channels" : no_family));
            }
        } else if (suite == "membership") {
            if (disc) {
                rep.suites.push_back(
                    membership_suite(*disc, grid, scenario.law_effects, rep.seed, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "consistency") {
            if (disc && !disc->discriminating.empty()) {
                rep.suites.push_back(consistency_suite(*disc, phases, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "induced_observable") {
            if (disc) {
                rep.suites.push_back(induced_observable_suite(*disc, 20, 50, rep.seed, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else if (suite == "output_states") {
            if (disc) {
                DensityOperator x = scenario.build_input_state(tol);
                rep.suites.push_back(output_states_suite(*disc, x, 20, rep.seed, tol));
            } else {
                rep.suites.push_back(skipped(suite, no_family));
            }
        } else {
            throw ScenarioError("suites: unknown suite '" + suite + "'");
        }
    }
    return rep;
}

VerificationReport run_sampler(const ScenarioFile& scenario, std::optional<long> trials_override,
                               std::optional<std::uint64_t> seed_override,
                               std::optional<double> tolerance_scale_override,
                               const ToleranceConfig& base_tol) {
    VerificationReport rep;
    rep.scenario_name = scenario.name;
    rep.seed = seed_override.value_or(scenario.seed);
    rep.tolerance_scale = tolerance_scale_override.value_or(scenario.tolerance_scale);
    ToleranceConfig tol = base_tol.scaled(rep.tolerance_scale);
    long trials = trials_override.value_or(scenario.trials);
    if (trials < 1) {
        throw ScenarioError("trials: must be positive");
    }

    if (scenario.has_multiway()) {
        MultiwayScenario mw = scenario.build_multiway(tol);
        DensityOperator x = scenario.build_input_state(tol);
        SuiteResult r;
        r.name = "multiway_filter";
        r.checks = trials;
        try {
            MultiwayRun run = multiway_filter(mw, x, trials, rep.seed, tol);
            bool bands_ok = true;
            for (size_t i = 0; i < run.counts.size(); ++i) {
                double expected = run.expected[i];
                double freq =
                    static_cast<double>(run.counts[i]) / static_cast<double>(run.trials);
                double sigma =
                    std::sqrt(std::max(expected * (1.0 - expected), 1e-300) /
                              static_cast<double>(run.trials));
                double dev = std::abs(freq - expected);
                r.details["count_" + std::to_string(i)] = static_cast<double>(run.counts[i]);
                r.details["expected_" + std::to_string(i)] = expected;
                r.details["frequency_" + std::to_string(i)] = freq;
                if (dev > 3.0 * sigma) {
                    bands_ok = false;
                    r.worst_witness = "index " + std::to_string(i) + " off by " + fmt(dev);
                }
                r.max_residual = std::max(r.max_residual, dev);
            }
            r.details["inconsistencies"] = 0.0;
            r.tolerance = 0.0;  // the 3-sigma bands are per index
            r.notes.push_back("per-index frequencies checked against 3-sigma binomial bands");
            r.pass = bands_ok;
        } catch (const InconsistencyError& e) {
            r.pass = false;
            r.notes.push_back(e.what());
        }
        rep.suites.push_back(std::move(r));
        return rep;
    }

    if (!scenario.has_family() || scenario.discriminating_readings.empty()) {
        rep.suites.push_back(
            skipped("sampler", "scenario provides no discrimination premises to sample"));
        return rep;
    }

    DiscriminationScenario disc = scenario.build_scenario(tol);
    DensityOperator x = scenario.build_input_state(tol);
    TrialRun run = sample_trials(disc, x, trials, rep.seed, tol);

    SuiteResult r;
    r.name = "sampler";
    r.checks = trials;
    double expected = run.summary.expected_e1;
    double sigma = std::sqrt(std::max(expected * (1.0 - expected), 1e-300) /
                             static_cast<double>(trials));
    double dev = std::abs(run.summary.frequency_e1 - expected);
    r.details["trials"] = static_cast<double>(run.summary.trials);
    r.details["disagreements"] = static_cast<double>(run.summary.disagreements);
    r.details["disagreement_frequency"] =
        static_cast<double>(run.summary.disagreements) / static_cast<double>(trials);
    r.details["frequency_e1"] = run.summary.frequency_e1;
    r.details["expected_e1"] = expected;
    r.details["sigma"] = sigma;
    r.max_residual = dev;
    r.tolerance = 3.0 * sigma;
    bool premises = disc.premises_ok(tol);
    r.pass = premises && run.summary.disagreements == 0 && dev <= 3.0 * sigma;
    if (!premises) {
        r.notes.push_back("discrimination premises do not hold; objective events not guaranteed");
    }
    if (run.summary.disagreements > 0) {
        r.worst_witness = std::to_string(run.summary.disagreements) + " disagreeing trials";
    }
    rep.suites.push_back(std::move(r));
    return rep;
}

VerificationReport run_fuzz(int object_dim, const std::vector<int>& probe_dims, int count,
                            std::uint64_t seed, double tolerance_scale,
                            const ToleranceConfig& base_tol) {
    VerificationReport rep;
    std::ostringstream name;
    name << "fuzz-" << object_dim << "x[";
    for (size_t i = 0; i < probe_dims.size(); ++i) {
        name << (i ? "," : "") << probe_dims[i];
    }
    name << "]";
    rep.scenario_name = name.str();
    rep.seed = seed;
    rep.tolerance_scale = tolerance_scale;
    ToleranceConfig tol = base_tol.scaled(tolerance_scale);

    for (int k = 0; k < count; ++k) {
        ScenarioFile sf = generate_random_scenario(object_dim, probe_dims, seed + static_cast<std::uint64_t>(k));
        MeasurementModel model = sf.build_model(tol);
        SuiteResult r = axioms_suite(model, sf.axiom_samples, sf.seed, tol);
        r.name = "axioms(" + sf.name + ")";
        rep.suites.push_back(std::move(r));
    }
    return rep;
}

}  // namespace qmv
