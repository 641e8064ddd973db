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

#ifndef QMV_THEOREMS_HPP
#define QMV_THEOREMS_HPP

#include "qmv/measurement.hpp"
#include "qmv/superposition.hpp"

namespace qmv {

/// A measurement together with a pair of orthogonal object states and, per
/// channel, a reading claimed to fire with certainty on x1 and never on x2.
/// The claims are NOT enforced at construction: negative controls ship
/// deliberately broken readings, and the point of check_discrimination is to
/// expose them. Call premises_ok() (or run the discrimination suite) before
/// trusting the theorem verdicts.
struct DiscriminationScenario {
    MeasurementModel model;
    SuperpositionFamily fam;
    std::map<std::string, Effect> discriminating;

    bool premises_ok(const ToleranceConfig& tol = {}) const;
};

/// Residuals of the discrimination premise for one reading: r1 = |m(A;x1)-1|
/// and r2 = m(A;x2). Both at most tol.disc means the reading discriminates;
/// its complement then discriminates the other way round.
struct DiscriminationCheck {
    bool ok = false;
    double r1 = 0.0;
    double r2 = 0.0;
};

DiscriminationCheck check_discrimination(const MeasurementModel& model,
                                         const SuperpositionFamily& fam,
                                         const std::string& channel, const Effect& a,
                                         const ToleranceConfig& tol = {});

/// Max residual of a sweep together with the grid point achieving it.
struct SweepReport {
    double max_residual = 0.0;
    std::string worst_witness;
    int checks = 0;

    void record(double residual, const std::string& witness);
};

/// The probability rule: a discriminating reading fires with probability
/// c1_sq on EVERY member of the superposition family, coherent at any phase
/// or mixed, for every weight pair.
SweepReport verify_probability_rule(const DiscriminationScenario& scenario,
                                    const std::vector<double>& phases,
                                    const std::vector<Weights>& weight_grid,
                                    const ToleranceConfig& tol = {});

struct StateReductionReport {
    SweepReport coincidence;  ///< m(A_nu, A_mu; X) independent of the member X
    SweepReport marginal;     ///< m(A_nu; X) affine in the components
};

/// Restricted state reduction: any observation that excludes a
/// discriminating channel is insensitive to interference. Each provided
/// reading set is tested against every discriminating channel it excludes,
/// over all phases of the coherent member and the mixture, at the scenario's
/// own weights.
StateReductionReport verify_state_reduction(const DiscriminationScenario& scenario,
                                            const std::vector<ReadingSet>& observations,
                                            const std::vector<double>& phases,
                                            const ToleranceConfig& tol = {});

struct ObjectivityReport {
    SweepReport disagreement;  ///< coincidences of contradicting readings
    SweepReport agreement;     ///< pairwise equality of coincidence and marginals
};

/// Objectivity: for every ordered pair of discriminating channels, the
/// probability that their readings disagree vanishes, and coincidence and
/// both marginals coincide, on every family member over the weight grid.
ObjectivityReport verify_objectivity(const DiscriminationScenario& scenario,
                                     const std::vector<double>& phases,
                                     const std::vector<Weights>& weight_grid,
                                     const ToleranceConfig& tol = {});

/// One sampled trial: the outcome bit of each discriminating channel.
struct TrialRecord {
    long trial_index = 0;
    std::map<std::string, int> outcomes;
    bool agreed = false;
};

struct TrialSummary {
    long trials = 0;
    long disagreements = 0;
    long count_all_one = 0;
    double frequency_e1 = 0.0;  ///< empirical frequency of the agreed value 1
    double expected_e1 = 0.0;   ///< model probability of the all-ones tuple
};

struct TrialRun {
    std::vector<TrialRecord> records;
    TrialSummary summary;
};

/// Draws `n_trials` outcome tuples from the joint distribution of all
/// discriminating readings by inverse CDF over the lexicographically ordered
/// tuples, using a counter-based generator: trial t is a pure function of
/// (seed, t).
TrialRun sample_trials(const DiscriminationScenario& scenario, const DensityOperator& x,
                       long n_trials, std::uint64_t seed, const ToleranceConfig& tol = {});

struct ChannelOffDiagonal {
    std::string channel;
    double magnitude = 0.0;  ///< |<v1| A |v2>| between the channel's two final states
};

/// Verdict on one product observation of the total final space.
struct ConsistencyReport {
    bool sensitive = false;      ///< phase sweep moves m beyond tol.prob
    double sweep_deviation = 0.0;
    double m_min = 0.0;          ///< range of m over the phase grid
    double m_max = 0.0;
    std::vector<ChannelOffDiagonal> factors;
    bool implication_holds = false;  ///< sensitive => every factor off-diagonal nonzero
};

/// Interference sensitivity requires participation of every channel: a
/// product observation of the full final state is sensitive only if each
/// factor connects the two states its channel holds. Requires one factor per
/// channel (the analysis is defined for product readings) and pure
/// per-channel final states.
ConsistencyReport consistency_analysis(const DiscriminationScenario& scenario,
                                       const ReadingSet& factors,
                                       const std::vector<double>& phases,
                                       const ToleranceConfig& tol = {});

/// A measurement discriminating every member of a family of mutually
/// orthogonal states: readings[channel][i] fires iff the object was in
/// states[i].
struct MultiwayScenario {
    MeasurementModel model;
    std::vector<DensityOperator> states;
    std::map<std::string, std::vector<Effect>> readings;
};

struct MultiwayRun {
    long trials = 0;
    std::vector<int> identified;        ///< per-trial state index
    std::vector<long> counts;           ///< per-index totals
    std::vector<double> expected;       ///< model probability of each index
};

/// Per-trial state identification: samples the joint reading outcome of all
/// channels and reports the unique index every channel agrees on. Validates
/// the premise m(readings[mu][i]; states[j]) = delta_ij first; throws
/// InconsistencyError if a trial's channels identify different indices
/// (impossible when the premise holds exactly).
MultiwayRun multiway_filter(const MultiwayScenario& scenario, const DensityOperator& x,
                            long n_trials, std::uint64_t seed,
                            const ToleranceConfig& tol = {});

/// The weight pairs used in theorem sweeps: degenerate endpoints, the
/// symmetric point, and a generic 3-4-5 pair.
std::vector<Weights> default_weight_grid();

}  // namespace qmv

#endif
