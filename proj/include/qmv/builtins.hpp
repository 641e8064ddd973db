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

#ifndef QMV_BUILTINS_HPP
#define QMV_BUILTINS_HPP

#include "qmv/scenario.hpp"

namespace qmv {

/// Shipped scenarios:
///   cnot2            two-channel copy model, 3-4-5 state family
///   cnot3            three-channel chain (a second copy appended to ch2)
///   qutrit3          three-state filter identifying the object per trial
///   cnot2-corrupted  cnot2 with a deliberately broken second reading; its
///                    suites must FAIL (negative control)
std::vector<std::string> builtin_scenario_names();

bool is_builtin_scenario(const std::string& name);

ScenarioFile builtin_scenario(const std::string& name);

}  // namespace qmv

#endif
