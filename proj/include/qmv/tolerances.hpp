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

#ifndef QMV_TOLERANCES_HPP
#define QMV_TOLERANCES_HPP

namespace qmv {

/// Numerical tolerances used throughout the toolkit. All checks receive one
/// of these explicitly; the defaults are sized for double precision on
/// dimensions up to a few hundred.
struct ToleranceConfig {
    double herm = 1e-10;    ///< max entrywise |M - M+| for Hermiticity
    double recon = 1e-8;    ///< Frobenius norm for reconstruction / unitarity
    double psd = 1e-9;      ///< slack below 0 (and above 1) for spectra
    double trace = 1e-9;    ///< |Tr - 1| for states, weight normalization
    double prob = 1e-8;     ///< probability identities and residuals
    double rank = 1e-9;     ///< eigenvalue cutoff for support / purity
    double orth = 1e-9;     ///< Tr[XY] threshold for orthogonality
    double member = 1e-8;   ///< Frobenius threshold for compression checks
    double disc = 1e-9;     ///< discrimination premise residuals
    double sel = 1e-12;     ///< guard against near-null selection events

    /// All thresholds multiplied by `factor` (CLI --tolerance-scale).
    ToleranceConfig scaled(double factor) const {
        ToleranceConfig t = *this;
        t.herm *= factor;
        t.recon *= factor;
        t.psd *= factor;
        t.trace *= factor;
        t.prob *= factor;
        t.rank *= factor;
        t.orth *= factor;
        t.member *= factor;
        t.disc *= factor;
        t.sel *= factor;
        return t;
    }
};

}  // namespace qmv

#endif
