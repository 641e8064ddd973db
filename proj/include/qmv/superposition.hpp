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

#ifndef QMV_SUPERPOSITION_HPP
#define QMV_SUPERPOSITION_HPP

#include <string>
#include <vector>

#include "qmv/quantum.hpp"

namespace qmv {

/// The family of superpositions of two orthogonal states with fixed weights:
/// all states X whose compressions onto the supports of x1 and x2 reproduce
/// c1_sq * x1 and c2_sq * x2. Definable purely in terms of probabilities: an
/// effect that never fires on x1 sees X exactly as it sees c2_sq * x2, and
/// symmetrically.
class SuperpositionFamily {
  public:
    SuperpositionFamily(DensityOperator x1, DensityOperator x2, Weights w,
                        const ToleranceConfig& tol = {});

    const DensityOperator& x1() const { return x1_; }
    const DensityOperator& x2() const { return x2_; }
    const Weights& weights() const { return w_; }
    int dim() const { return x1_.dim(); }

    /// Family with the same component states but different weights.
    SuperpositionFamily with_weights(const Weights& w, const ToleranceConfig& tol = {}) const;

  private:
    DensityOperator x1_;
    DensityOperator x2_;
    Weights w_;
};

/// Complementary projector pair certifying membership: p1 + p2 = I and
/// p_i X p_i = c_i_sq * x_i.
struct SuperpositionWitness {
    Effect p1;
    Effect p2;
};

struct MembershipResult {
    bool member = false;
    double residual1 = 0.0;       ///< ||p1 X p1 - c1_sq x1||_F
    double residual2 = 0.0;       ///< ||p2 X p2 - c2_sq x2||_F
    double leakage = 0.0;         ///< (p1, x2): x2 must live inside p2
    std::vector<SuperpositionWitness> witness;  ///< nonempty iff member
};

/// Residuals of the defining probability law, probed with sampled effects
/// that are blind to one component.
struct SuperpositionLawReport {
    double max_residual = 0.0;
    std::string worst_witness;
    int effects_checked = 0;
};

/// The coherent superposition c1 |phi1> + c2 |phi2> of two pure components,
/// with |c_i| = sqrt(w.c_i_sq) and the relative phase carried by c2.
/// Throws PreconditionError when a component is not pure.
DensityOperator coherent(const SuperpositionFamily& fam, const ToleranceConfig& tol = {});
DensityOperator coherent(const SuperpositionFamily& fam, double phase,
                         const ToleranceConfig& tol = {});

/// Membership test against the fixed projector pair p1 = support of x1,
/// p2 = I - p1. This pair is canonical: any valid witness must reproduce the
/// components on these supports, so rejection here is conclusive whenever x2
/// is supported inside p2 (which the orthogonality invariant guarantees).
MembershipResult is_member(const DensityOperator& x, const SuperpositionFamily& fam,
                           const ToleranceConfig& tol = {});

/// Samples `trials` effects with (A, x1) = 0 (compressions B -> p2 B p2 of
/// random effects; the identity is always included) and reports the largest
/// deviation |(A, x) - c2_sq (A, x2)|, then the same with roles swapped.
SuperpositionLawReport check_superposition_law(const DensityOperator& x,
                                               const SuperpositionFamily& fam, int trials,
                                               std::uint64_t seed,
                                               const ToleranceConfig& tol = {});

/// |<phi1| A |phi2>| for a pure family: zero exactly when (A, X) is the same
/// for every member of the family.
double off_diagonal_magnitude(const Effect& a, const SuperpositionFamily& fam,
                              const ToleranceConfig& tol = {});

/// True iff (A, X) is constant over the family: the phase sweep of the
/// coherent member never deviates from the incoherent mixture by more than
/// tol.prob, cross-checked against the off-diagonal criterion. Requires pure
/// components (the sweep cannot enumerate mixed-state members).
bool is_interference_insensitive(const Effect& a, const SuperpositionFamily& fam,
                                 const std::vector<double>& phase_grid,
                                 const ToleranceConfig& tol = {});

/// n equally spaced phases in [0, 2*pi). Eight points cannot alias a rank-1
/// interference fringe to a constant.
std::vector<double> default_phase_grid(int n = 8);

}  // namespace qmv

#endif
