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

#ifndef QMV_ERRORS_HPP
#define QMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmv {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or tensor-layout mismatch between operands.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// An operand violates a documented precondition (non-Hermitian input,
/// non-pure state, invalid spectrum, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Conditioning on an event whose probability is numerically zero.
struct DegenerateSelectionError : Error {
    explicit DegenerateSelectionError(const std::string& what) : Error(what) {}
};

/// Scenario file cannot be parsed or fails validation (CLI exit code 2).
struct ScenarioError : Error {
    explicit ScenarioError(const std::string& what) : Error(what) {}
};

/// A state of affairs the theory forbids was observed (e.g. a trial whose
/// channel readings identify no unique state index).
struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace qmv

#endif
