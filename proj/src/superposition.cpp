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

#include "qmv/superposition.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace qmv {

SuperpositionFamily::SuperpositionFamily(DensityOperator x1, DensityOperator x2, Weights w,
                                         const ToleranceConfig& tol)
    : x1_(std::move(x1)), x2_(std::move(x2)), w_(std::move(w)) {
    if (x1_.dim() != x2_.dim()) {
        throw DimensionError("SuperpositionFamily: component dimensions differ");
    }
    if (!are_orthogonal(x1_, x2_, tol)) {
        std::ostringstream msg;
        msg << "SuperpositionFamily: components not orthogonal (Tr[x1 x2] = "
            << overlap(x1_, x2_) << ")";
        throw PreconditionError(msg.str());
    }
}

SuperpositionFamily SuperpositionFamily::with_weights(const Weights& w,
                                                      const ToleranceConfig& tol) const {
    return SuperpositionFamily(x1_, x2_, w, tol);
}

DensityOperator coherent(const SuperpositionFamily& fam, const ToleranceConfig& tol) {
    return coherent(fam, fam.weights().phase_or_zero(), tol);
}

DensityOperator coherent(const SuperpositionFamily& fam, double phase,
                         const ToleranceConfig& tol) {
    ComplexVector v1 = fam.x1().pure_vector(tol);
    ComplexVector v2 = fam.x2().pure_vector(tol);
    Complex c1 = std::sqrt(fam.weights().c1_sq);
    Complex c2 = std::sqrt(fam.weights().c2_sq) * std::exp(Complex(0.0, phase));
    ComplexVector v = c1 * v1 + c2 * v2;
    return DensityOperator(projector(v), tol);
}

MembershipResult is_member(const DensityOperator& x, const SuperpositionFamily& fam,
                           const ToleranceConfig& tol) {
    if (x.dim() != fam.dim()) {
        throw DimensionError("is_member: dimension mismatch");
    }
    Effect p1 = support_projector(fam.x1(), tol);
    Effect p2 = complement(p1, tol);

    MembershipResult res;
    res.residual1 = frobenius_distance(p1.matrix() * x.matrix() * p1.matrix(),
                                       fam.weights().c1_sq * fam.x1().matrix());
    res.residual2 = frobenius_distance(p2.matrix() * x.matrix() * p2.matrix(),
                                       fam.weights().c2_sq * fam.x2().matrix());
    res.leakage = probability(p1, fam.x2());
    res.member = res.residual1 <= tol.member && res.residual2 <= tol.member &&
                 res.leakage <= tol.orth;
    if (res.member) {
        res.witness.push_back(SuperpositionWitness{p1, p2});
    }
    return res;
}

namespace {

/// Effect supported inside the projector p: p B p for an effect B.
Effect compressed_effect(const Effect& p, const ComplexMatrix& b, const ToleranceConfig& tol) {
    ComplexMatrix m = p.matrix() * b * p.matrix();
    m = 0.5 * (m + m.adjoint().eval());
    return Effect(m, tol);
}

}  // namespace

SuperpositionLawReport check_superposition_law(const DensityOperator& x,
                                               const SuperpositionFamily& fam, int trials,
                                               std::uint64_t seed, const ToleranceConfig& tol) {
    if (x.dim() != fam.dim()) {
        throw DimensionError("check_superposition_law: dimension mismatch");
    }
    Effect p1 = support_projector(fam.x1(), tol);
    Effect p2 = support_projector(fam.x2(), tol);

    SuperpositionLawReport report;
    Rng rng(seed);

    auto probe = [&](const Effect& blind_to_first, const DensityOperator& other, double c_other,
                     int side, int index) {
        double lhs = probability(blind_to_first, x);
        double rhs = c_other * probability(blind_to_first, other);
        double r = std::abs(lhs - rhs);
        if (r > report.max_residual) {
            report.max_residual = r;
            std::ostringstream w;
            w << "blind side " << side << ", effect " << index << ": (A,X)=" << lhs
              << " expected " << rhs;
            report.worst_witness = w.str();
        }
        ++report.effects_checked;
    };

    for (int t = 0; t < trials; ++t) {
        // t == 0 probes with B = I, i.e. the bare complementary projectors.
        ComplexMatrix b = (t == 0) ? identity(x.dim()) : random_effect(x.dim(), rng, tol).matrix();
        // (A1, x1) = 0 by construction: A1 lives in the orthocomplement of x1.
        Effect a1 = compressed_effect(complement(p1, tol), b, tol);
        probe(a1, fam.x2(), fam.weights().c2_sq, 1, t);
        Effect a2 = compressed_effect(complement(p2, tol), b, tol);
        probe(a2, fam.x1(), fam.weights().c1_sq, 2, t);
    }
    return report;
}

double off_diagonal_magnitude(const Effect& a, const SuperpositionFamily& fam,
                              const ToleranceConfig& tol) {
    ComplexVector v1 = fam.x1().pure_vector(tol);
    ComplexVector v2 = fam.x2().pure_vector(tol);
    return std::abs((v1.adjoint() * a.matrix() * v2)(0, 0));
}

bool is_interference_insensitive(const Effect& a, const SuperpositionFamily& fam,
                                 const std::vector<double>& phase_grid,
                                 const ToleranceConfig& tol) {
    DensityOperator mixture = mix(fam.weights(), fam.x1(), fam.x2(), tol);
    double p_mix = probability(a, mixture);
    double sweep = 0.0;
    for (double phase : phase_grid) {
        double p = probability(a, coherent(fam, phase, tol));
        sweep = std::max(sweep, std::abs(p - p_mix));
    }
    bool sweep_ok = sweep <= tol.prob;
    bool algebraic_ok = off_diagonal_magnitude(a, fam, tol) <= tol.orth;
    return sweep_ok && algebraic_ok;
}

std::vector<double> default_phase_grid(int n) {
    std::vector<double> grid(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        grid[static_cast<size_t>(k)] = 2.0 * std::numbers::pi * k / n;
    }
    return grid;
}

}  // namespace qmv
