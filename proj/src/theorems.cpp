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

#include "qmv/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qmv {

bool DiscriminationScenario::premises_ok(const ToleranceConfig& tol) const {
    if (discriminating.empty()) {
        return false;
    }
    for (const auto& [name, a] : discriminating) {
        if (!check_discrimination(model, fam, name, a, tol).ok) {
            return false;
        }
    }
    return true;
}

DiscriminationCheck check_discrimination(const MeasurementModel& model,
                                         const SuperpositionFamily& fam,
                                         const std::string& channel, const Effect& a,
                                         const ToleranceConfig& tol) {
    ReadingSet rs;
    rs.readings.emplace(channel, a);
    DiscriminationCheck check;
    check.r1 = std::abs(coincidence_probability(model, rs, fam.x1(), tol) - 1.0);
    check.r2 = std::abs(coincidence_probability(model, rs, fam.x2(), tol));
    check.ok = check.r1 <= tol.disc && check.r2 <= tol.disc;
    return check;
}

void SweepReport::record(double residual, const std::string& witness) {
    ++checks;
    if (residual > max_residual) {
        max_residual = residual;
        worst_witness = witness;
    }
}

namespace {

/// Enumerate accessible members of the family: the incoherent mixture
/// always, the coherent member at each phase when the components are pure.
void for_each_member(const SuperpositionFamily& fam, const std::vector<double>& phases,
                     const ToleranceConfig& tol,
                     const std::function<void(const DensityOperator&, const std::string&)>& fn) {
    fn(mix(fam.weights(), fam.x1(), fam.x2(), tol), "mixture");
    if (fam.x1().is_pure(tol) && fam.x2().is_pure(tol)) {
        for (double phase : phases) {
            std::ostringstream desc;
            desc << "coherent phase=" << phase;
            fn(coherent(fam, phase, tol), desc.str());
        }
    }
}

std::string weight_tag(const Weights& w) {
    std::ostringstream s;
    s << "w=(" << w.c1_sq << "," << w.c2_sq << ")";
    return s.str();
}

}  // namespace

SweepReport verify_probability_rule(const DiscriminationScenario& scenario,
                                    const std::vector<double>& phases,
                                    const std::vector<Weights>& weight_grid,
                                    const ToleranceConfig& tol) {
    SweepReport report;
    for (const Weights& w : weight_grid) {
        SuperpositionFamily fam = scenario.fam.with_weights(w, tol);
        for_each_member(fam, phases, tol, [&](const DensityOperator& x, const std::string& tag) {
            DensityOperator fin = final_state(scenario.model, x, tol);
            for (const auto& [name, a] : scenario.discriminating) {
                ReadingSet rs;
                rs.readings.emplace(name, a);
                double m = coincidence_on_final(scenario.model, rs, fin, tol);
                report.record(std::abs(m - w.c1_sq),
                              weight_tag(w) + " " + tag + " channel=" + name);
            }
        });
    }
    return report;
}

StateReductionReport verify_state_reduction(const DiscriminationScenario& scenario,
                                            const std::vector<ReadingSet>& observations,
                                            const std::vector<double>& phases,
                                            const ToleranceConfig& tol) {
    StateReductionReport report;
    const SuperpositionFamily& fam = scenario.fam;
    const Weights& w = fam.weights();

    DensityOperator mixture = mix(w, fam.x1(), fam.x2(), tol);
    DensityOperator fin_mix = final_state(scenario.model, mixture, tol);
    DensityOperator fin_x1 = final_state(scenario.model, fam.x1(), tol);
    DensityOperator fin_x2 = final_state(scenario.model, fam.x2(), tol);

    for (const auto& [mu, a_mu] : scenario.discriminating) {
        for (size_t oi = 0; oi < observations.size(); ++oi) {
            const ReadingSet& obs = observations[oi];
            if (obs.contains(mu)) {
                continue;  // the observation must exclude the discriminating channel
            }
            ReadingSet with_mu = obs.with(mu, a_mu);
            double coin_mix = coincidence_on_final(scenario.model, with_mu, fin_mix, tol);
            double marg_mix = coincidence_on_final(scenario.model, obs, fin_mix, tol);
            double marg_components =
                w.c1_sq * coincidence_on_final(scenario.model, obs, fin_x1, tol) +
                w.c2_sq * coincidence_on_final(scenario.model, obs, fin_x2, tol);

            for_each_member(fam, phases, tol,
                            [&](const DensityOperator& x, const std::string& tag) {
                DensityOperator fin = final_state(scenario.model, x, tol);
                std::ostringstream where;
                where << "obs#" << oi << " mu=" << mu << " " << tag;
                double coin = coincidence_on_final(scenario.model, with_mu, fin, tol);
                report.coincidence.record(std::abs(coin - coin_mix), where.str());
                double marg = coincidence_on_final(scenario.model, obs, fin, tol);
                report.marginal.record(std::abs(marg - marg_mix), where.str());
                report.marginal.record(std::abs(marg - marg_components),
                                       where.str() + " (components)");
            });
        }
    }
    return report;
}

ObjectivityReport verify_objectivity(const DiscriminationScenario& scenario,
                                     const std::vector<double>& phases,
                                     const std::vector<Weights>& weight_grid,
                                     const ToleranceConfig& tol) {
    if (scenario.discriminating.size() < 2) {
        throw PreconditionError(
            "verify_objectivity: at least two discriminating channels required");
    }
    ObjectivityReport report;
    for (const Weights& w : weight_grid) {
        SuperpositionFamily fam = scenario.fam.with_weights(w, tol);
        for_each_member(fam, phases, tol, [&](const DensityOperator& x, const std::string& tag) {
            DensityOperator fin = final_state(scenario.model, x, tol);
            for (const auto& [mu, a_mu] : scenario.discriminating) {
                for (const auto& [nu, a_nu] : scenario.discriminating) {
                    if (mu == nu) {
                        continue;
                    }
                    std::ostringstream where;
                    where << weight_tag(w) << " " << tag << " pair=(" << mu << "," << nu << ")";

                    ReadingSet rs_mu, rs_nu;
                    rs_mu.readings.emplace(mu, a_mu);
                    rs_nu.readings.emplace(nu, a_nu);

                    double disagree =
                        coincidence_on_final(scenario.model, rs_mu.with(nu, complement(a_nu, tol)),
                                             fin, tol);
                    report.disagreement.record(std::abs(disagree), where.str());

                    double both =
                        coincidence_on_final(scenario.model, rs_mu.with(nu, a_nu), fin, tol);
                    double m_mu = coincidence_on_final(scenario.model, rs_mu, fin, tol);
                    double m_nu = coincidence_on_final(scenario.model, rs_nu, fin, tol);
                    double residual = std::max({std::abs(both - m_mu), std::abs(both - m_nu),
                                                std::abs(m_mu - m_nu)});
                    report.agreement.record(residual, where.str());
                }
            }
        });
    }
    return report;
}

TrialRun sample_trials(const DiscriminationScenario& scenario, const DensityOperator& x,
                       long n_trials, std::uint64_t seed, const ToleranceConfig& tol) {
    if (scenario.discriminating.empty()) {
        throw PreconditionError("sample_trials: no discriminating readings");
    }
    ReadingSet rs;
    for (const auto& [name, a] : scenario.discriminating) {
        rs.readings.emplace(name, a);
    }
    CoincidenceDistribution dist = coincidence_distribution(scenario.model, rs, x, tol);

    const int tuples = dist.tuple_count();
    const int k = static_cast<int>(dist.channels.size());
    std::vector<double> cdf(static_cast<size_t>(tuples));
    double acc = 0.0;
    for (int t = 0; t < tuples; ++t) {
        acc += std::max(0.0, dist.probabilities[static_cast<size_t>(t)]);
        cdf[static_cast<size_t>(t)] = acc;
    }

    TrialRun run;
    run.records.reserve(static_cast<size_t>(n_trials));
    run.summary.trials = n_trials;
    // The all-ones tuple; clamped so reported probabilities stay in [0, 1].
    run.summary.expected_e1 = std::clamp(dist.probabilities.back(), 0.0, 1.0);

    for (long trial = 0; trial < n_trials; ++trial) {
        double u = counter_uniform(seed, static_cast<std::uint64_t>(trial)) * acc;
        int chosen = tuples - 1;
        for (int t = 0; t < tuples; ++t) {
            if (u < cdf[static_cast<size_t>(t)]) {
                chosen = t;
                break;
            }
        }
        TrialRecord record;
        record.trial_index = trial;
        bool all_one = true, all_zero = true;
        for (int pos = 0; pos < k; ++pos) {
            int bit = CoincidenceDistribution::outcome_bit(chosen, pos, k);
            record.outcomes.emplace(dist.channels[static_cast<size_t>(pos)], bit);
            all_one = all_one && bit == 1;
            all_zero = all_zero && bit == 0;
        }
        record.agreed = all_one || all_zero;
        if (!record.agreed) {
            ++run.summary.disagreements;
        }
        if (all_one) {
            ++run.summary.count_all_one;
        }
        run.records.push_back(std::move(record));
    }
    run.summary.frequency_e1 =
        static_cast<double>(run.summary.count_all_one) / static_cast<double>(n_trials);
    return run;
}

ConsistencyReport consistency_analysis(const DiscriminationScenario& scenario,
                                       const ReadingSet& factors,
                                       const std::vector<double>& phases,
                                       const ToleranceConfig& tol) {
    const auto names = scenario.model.channel_layout().channel_names();
    for (const auto& name : names) {
        if (!factors.contains(name)) {
            throw PreconditionError(
                "consistency_analysis: product observation must provide a factor for channel '" +
                name + "'");
        }
    }
    if (factors.readings.size() != names.size()) {
        throw PreconditionError(
            "consistency_analysis: observation names a channel the model does not have");
    }
    const SuperpositionFamily& fam = scenario.fam;
    if (!fam.x1().is_pure(tol) || !fam.x2().is_pure(tol)) {
        throw PreconditionError("consistency_analysis: family components must be pure");
    }

    ConsistencyReport report;

    DensityOperator mixture = mix(fam.weights(), fam.x1(), fam.x2(), tol);
    double m_mix = coincidence_probability(scenario.model, factors, mixture, tol);
    bool first = true;
    for (double phase : phases) {
        DensityOperator member = coherent(fam, phase, tol);
        double m = coincidence_probability(scenario.model, factors, member, tol);
        report.sweep_deviation = std::max(report.sweep_deviation, std::abs(m - m_mix));
        report.m_min = first ? m : std::min(report.m_min, m);
        report.m_max = first ? m : std::max(report.m_max, m);
        first = false;
    }
    report.sensitive = report.sweep_deviation > tol.prob;

    // Per channel: the two states the channel ends up holding, and how
    // strongly this factor connects them.
    for (const auto& name : names) {
        DensityOperator s1 = output_state(scenario.model, name, fam.x1(), tol);
        DensityOperator s2 = output_state(scenario.model, name, fam.x2(), tol);
        ComplexVector v1 = s1.pure_vector(tol);
        ComplexVector v2 = s2.pure_vector(tol);
        const Effect& a = factors.readings.at(name);
        double magnitude = std::abs((v1.adjoint() * a.matrix() * v2)(0, 0));
        report.factors.push_back(ChannelOffDiagonal{name, magnitude});
    }

    bool some_factor_blind = false;
    for (const auto& f : report.factors) {
        if (f.magnitude <= tol.orth) {
            some_factor_blind = true;
        }
    }
    report.implication_holds = !(report.sensitive && some_factor_blind);
    return report;
}

MultiwayRun multiway_filter(const MultiwayScenario& scenario, const DensityOperator& x,
                            long n_trials, std::uint64_t seed, const ToleranceConfig& tol) {
    const int n_states = static_cast<int>(scenario.states.size());
    if (n_states < 2) {
        throw PreconditionError("multiway_filter: at least two states required");
    }
    if (scenario.readings.empty()) {
        throw PreconditionError("multiway_filter: no channel readings");
    }

    // Premise: reading i of every channel fires exactly on state i.
    for (const auto& [name, per_state] : scenario.readings) {
        if (static_cast<int>(per_state.size()) != n_states) {
            throw PreconditionError("multiway_filter: channel '" + name +
                                    "' must provide one reading per state");
        }
        for (int i = 0; i < n_states; ++i) {
            ReadingSet rs;
            rs.readings.emplace(name, per_state[static_cast<size_t>(i)]);
            for (int j = 0; j < n_states; ++j) {
                double m =
                    coincidence_probability(scenario.model, rs, scenario.states[static_cast<size_t>(j)], tol);
                double target = (i == j) ? 1.0 : 0.0;
                if (std::abs(m - target) > tol.disc) {
                    std::ostringstream msg;
                    msg << "multiway_filter: reading " << i << " of channel '" << name
                        << "' does not discriminate (m on state " << j << " is " << m << ")";
                    throw PreconditionError(msg.str());
                }
            }
        }
    }

    std::vector<std::string> channels;
    for (const auto& [name, per_state] : scenario.readings) {
        channels.push_back(name);
    }
    const int k = static_cast<int>(channels.size());

    // Joint distribution over index tuples, first channel's digit most
    // significant.
    long tuples = 1;
    for (int c = 0; c < k; ++c) {
        tuples *= n_states;
    }
    DensityOperator fin = final_state(scenario.model, x, tol);
    std::vector<double> probs(static_cast<size_t>(tuples));
    double sum = 0.0;
    for (long t = 0; t < tuples; ++t) {
        long rest = t;
        std::vector<int> digits(static_cast<size_t>(k));
        for (int c = k - 1; c >= 0; --c) {
            digits[static_cast<size_t>(c)] = static_cast<int>(rest % n_states);
            rest /= n_states;
        }
        ReadingSet rs;
        for (int c = 0; c < k; ++c) {
            rs.readings.emplace(
                channels[static_cast<size_t>(c)],
                scenario.readings.at(channels[static_cast<size_t>(c)])[static_cast<size_t>(
                    digits[static_cast<size_t>(c)])]);
        }
        double p = coincidence_on_final(scenario.model, rs, fin, tol);
        probs[static_cast<size_t>(t)] = p;
        sum += std::max(0.0, p);
    }
    if (std::abs(sum - 1.0) > tol.prob) {
        std::ostringstream msg;
        msg << "multiway_filter: joint outcome probabilities sum to " << sum
            << "; per-channel readings do not resolve the input state";
        throw PreconditionError(msg.str());
    }

    std::vector<double> cdf(static_cast<size_t>(tuples));
    double acc = 0.0;
    for (long t = 0; t < tuples; ++t) {
        acc += std::max(0.0, probs[static_cast<size_t>(t)]);
        cdf[static_cast<size_t>(t)] = acc;
    }

    MultiwayRun run;
    run.trials = n_trials;
    run.identified.reserve(static_cast<size_t>(n_trials));
    run.counts.assign(static_cast<size_t>(n_states), 0);
    run.expected.assign(static_cast<size_t>(n_states), 0.0);
    for (int i = 0; i < n_states; ++i) {
        long diag = 0;
        for (int c = 0; c < k; ++c) {
            diag = diag * n_states + i;
        }
        run.expected[static_cast<size_t>(i)] = std::clamp(probs[static_cast<size_t>(diag)], 0.0, 1.0);
    }

    for (long trial = 0; trial < n_trials; ++trial) {
        double u = counter_uniform(seed, static_cast<std::uint64_t>(trial)) * acc;
        long chosen = tuples - 1;
        for (long t = 0; t < tuples; ++t) {
            if (u < cdf[static_cast<size_t>(t)]) {
                chosen = t;
                break;
            }
        }
        long rest = chosen;
        int index = -1;
        bool consistent = true;
        for (int c = k - 1; c >= 0; --c) {
            int digit = static_cast<int>(rest % n_states);
            rest /= n_states;
            if (index < 0) {
                index = digit;
            } else if (digit != index) {
                consistent = false;
            }
        }
        if (!consistent) {
            std::ostringstream msg;
            msg << "multiway_filter: trial " << trial
                << " identified different indices on different channels";
            throw InconsistencyError(msg.str());
        }
        run.identified.push_back(index);
        ++run.counts[static_cast<size_t>(index)];
    }
    return run;
}

std::vector<Weights> default_weight_grid() {
    return {Weights(1.0, 0.0), Weights(0.75, 0.25), Weights(0.5, 0.5), Weights(0.36, 0.64),
            Weights(0.0, 1.0)};
}

}  // namespace qmv
