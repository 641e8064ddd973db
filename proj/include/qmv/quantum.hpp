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

#ifndef QMV_QUANTUM_HPP
#define QMV_QUANTUM_HPP

#include <optional>

#include "qmv/linalg.hpp"
#include "qmv/rng.hpp"
#include "qmv/tolerances.hpp"

namespace qmv {

/// A state: Hermitian, positive semidefinite, unit trace. Immutable after
/// construction; the constructor validates all three properties.
class DensityOperator {
  public:
    explicit DensityOperator(ComplexMatrix m, const ToleranceConfig& tol = {});

    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

    /// True when the second-largest eigenvalue is at most tol.rank.
    bool is_pure(const ToleranceConfig& tol = {}) const;

    /// Statevector of a pure state, with a deterministic global phase (the
    /// entry of largest magnitude is made real positive).
    /// Throws PreconditionError when the state is not pure.
    ComplexVector pure_vector(const ToleranceConfig& tol = {}) const;

  private:
    ComplexMatrix mat_;
};

/// An observable: Hermitian with spectrum in [0, 1]. The value (A, X) is the
/// probability that the associated event occurs on state X.
class Effect {
  public:
    explicit Effect(ComplexMatrix m, const ToleranceConfig& tol = {});

    static Effect identity_effect(int dim);
    static Effect zero_effect(int dim);

    const ComplexMatrix& matrix() const { return mat_; }
    int dim() const { return static_cast<int>(mat_.rows()); }

  private:
    ComplexMatrix mat_;
};

/// Mixture weights |c1|^2 + |c2|^2 = 1, plus the relative phase of the
/// amplitudes when a coherent superposition is built from them.
struct Weights {
    double c1_sq = 1.0;
    double c2_sq = 0.0;
    std::optional<double> relative_phase;

    Weights() = default;
    Weights(double c1, double c2, std::optional<double> phase = std::nullopt,
            const ToleranceConfig& tol = {});

    double phase_or_zero() const { return relative_phase.value_or(0.0); }
};

// --------------------------------------------------------------------------
// The probability functional and its algebra
// --------------------------------------------------------------------------

/// (A, X) = Tr[A X]. Real up to numerical noise; the real part is returned
/// unclamped so residual checks see the raw value.
double probability(const Effect& a, const DensityOperator& x);

/// I - A, the observable of the negated event.
Effect complement(const Effect& a, const ToleranceConfig& tol = {});

/// |c1|^2 x1 + |c2|^2 x2.
DensityOperator mix(const Weights& w, const DensityOperator& x1, const DensityOperator& x2,
                    const ToleranceConfig& tol = {});

/// True iff Tr[x1 x2] <= tol.orth. For positive semidefinite operators this
/// is equivalent to orthogonality of the ranges, and it guarantees that a
/// discriminating observable exists (see support_projector).
bool are_orthogonal(const DensityOperator& x1, const DensityOperator& x2,
                    const ToleranceConfig& tol = {});

double overlap(const DensityOperator& x1, const DensityOperator& x2);

/// Projector onto the range of x (eigenvalues above tol.rank). Satisfies
/// (P, x) = 1, and (P, y) = 0 for any y orthogonal to x.
Effect support_projector(const DensityOperator& x, const ToleranceConfig& tol = {});

// --------------------------------------------------------------------------
// Seeded random elements, for fuzzing the full state/effect sets
// --------------------------------------------------------------------------

/// G G+ / Tr[G G+] for a Ginibre matrix G: a full-rank generic state.
DensityOperator random_density_operator(int dim, Rng& rng, const ToleranceConfig& tol = {});

/// Random pure state (normalized Ginibre vector).
DensityOperator random_pure_state(int dim, Rng& rng, const ToleranceConfig& tol = {});

/// Random Hermitian matrix with its spectrum affinely rescaled into [0, 1].
Effect random_effect(int dim, Rng& rng, const ToleranceConfig& tol = {});

}  // namespace qmv

#endif
