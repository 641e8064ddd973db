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

#ifndef QMV_REPORT_HPP
#define QMV_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmv/tolerances.hpp"

namespace qmv {

/// Outcome of one verification suite. Residuals are maxima over the suite's
/// whole grid; the witness names the grid point that achieved the maximum.
struct SuiteResult {
    std::string name;
    bool skipped = false;
    std::string skip_reason;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    long checks = 0;
    std::string worst_witness;
    std::map<std::string, double> details;
    std::vector<std::string> notes;
};

/// Full run output. Serialization is canonical: two reports from the same
/// scenario text and seed are byte-identical, so wall time is deliberately
/// not part of the report.
struct VerificationReport {
    std::string scenario_name;
    std::uint64_t seed = 0;
    double tolerance_scale = 1.0;
    std::vector<SuiteResult> suites;

    bool all_pass() const;
    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace qmv

#endif
