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

#ifndef QMV_RUNNER_HPP
#define QMV_RUNNER_HPP

#include <optional>

#include "qmv/report.hpp"
#include "qmv/scenario.hpp"

namespace qmv {

/// Run every suite the scenario lists. Suites whose premises the scenario
/// does not provide (e.g. discrimination suites without a state family) are
/// skipped with a notice rather than failed. Deterministic in
/// (scenario, seed).
VerificationReport run_verification(const ScenarioFile& scenario,
                                    std::optional<std::uint64_t> seed_override = {},
                                    std::optional<double> tolerance_scale_override = {},
                                    const ToleranceConfig& base_tol = {});

/// Stochastic demonstration: sample outcome tuples trial by trial and check
/// the empirical frequencies against the model within 3-sigma binomial
/// bands. Binary scenarios sample the discriminating readings; multiway
/// scenarios identify the state index per trial.
VerificationReport run_sampler(const ScenarioFile& scenario,
                               std::optional<long> trials_override = {},
                               std::optional<std::uint64_t> seed_override = {},
                               std::optional<double> tolerance_scale_override = {},
                               const ToleranceConfig& base_tol = {});

/// Generate `count` random models over the given dimensions and run the
/// axiom suite on each.
VerificationReport run_fuzz(int object_dim, const std::vector<int>& probe_dims, int count,
                            std::uint64_t seed, double tolerance_scale = 1.0,
                            const ToleranceConfig& base_tol = {});

/// Deterministic per-dimension effect dictionary used by the consistency
/// sweep; 12 elements for dimension 2.
std::vector<Effect> effect_dictionary(int dim, const ToleranceConfig& tol = {});

}  // namespace qmv

#endif
