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

#include "qmv/quantum.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qmv {

namespace {

void check_same_dim(int a, int b, const char* what) {
    if (a != b) {
        std::ostringstream msg;
        msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DimensionError(msg.str());
    }
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix m, const ToleranceConfig& tol)
    : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
        throw DimensionError("DensityOperator: matrix must be square and nonempty");
    }
    check_finite(mat_, "DensityOperator");
    double defect = hermiticity_defect(mat_);
    if (defect > tol.herm) {
        std::ostringstream msg;
        msg << "DensityOperator: not Hermitian (defect " << defect << ")";
        throw PreconditionError(msg.str());
    }
    double tr_err = std::abs(mat_.trace() - Complex(1.0, 0.0));
    if (tr_err > tol.trace) {
        std::ostringstream msg;
        msg << "DensityOperator: trace deviates from 1 by " << tr_err;
        throw PreconditionError(msg.str());
    }
    auto [vals, vecs] = hermitian_eig(mat_, tol);
    double min_eig = vals(vals.size() - 1);
    if (min_eig < -tol.psd) {
        std::ostringstream msg;
        msg << "DensityOperator: smallest eigenvalue " << min_eig << " below -" << tol.psd;
        throw PreconditionError(msg.str());
    }
}

bool DensityOperator::is_pure(const ToleranceConfig& tol) const {
    if (dim() == 1) {
        return true;
    }
    auto [vals, vecs] = hermitian_eig(mat_, tol);
    return vals(1) <= tol.rank;
}

ComplexVector DensityOperator::pure_vector(const ToleranceConfig& tol) const {
    auto [vals, vecs] = hermitian_eig(mat_, tol);
    if (dim() > 1 && vals(1) > tol.rank) {
        std::ostringstream msg;
        msg << "pure_vector: state is not pure (second eigenvalue " << vals(1) << ")";
        throw PreconditionError(msg.str());
    }
    ComplexVector v = vecs.col(0);
    // Deterministic global phase: rotate the largest-magnitude entry onto
    // the positive real axis.
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v(i));
        if (a > best) {
            best = a;
            imax = i;
        }
    }
    Complex ph = v(imax) / best;
    return v / ph;
}

Effect::Effect(ComplexMatrix m, const ToleranceConfig& tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
        throw DimensionError("Effect: matrix must be square and nonempty");
    }
    check_finite(mat_, "Effect");
    double defect = hermiticity_defect(mat_);
    if (defect > tol.herm) {
        std::ostringstream msg;
        msg << "Effect: not Hermitian (defect " << defect << ")";
        throw PreconditionError(msg.str());
    }
    auto [vals, vecs] = hermitian_eig(mat_, tol);
    double max_eig = vals(0);
    double min_eig = vals(vals.size() - 1);
    if (min_eig < -tol.psd || max_eig > 1.0 + tol.psd) {
        std::ostringstream msg;
        msg << "Effect: spectrum [" << min_eig << ", " << max_eig << "] outside [0, 1]";
        throw PreconditionError(msg.str());
    }
}

Effect Effect::identity_effect(int dim) {
    return Effect(identity(dim));
}

Effect Effect::zero_effect(int dim) {
    return Effect(zeros(dim, dim));
}

Weights::Weights(double c1, double c2, std::optional<double> phase, const ToleranceConfig& tol)
    : c1_sq(c1), c2_sq(c2), relative_phase(phase) {
    if (c1_sq < 0.0 || c1_sq > 1.0 || c2_sq < 0.0 || c2_sq > 1.0) {
        throw PreconditionError("Weights: entries must lie in [0, 1]");
    }
    if (std::abs(c1_sq + c2_sq - 1.0) > tol.trace) {
        std::ostringstream msg;
        msg << "Weights: |c1|^2 + |c2|^2 = " << (c1_sq + c2_sq) << " != 1";
        throw PreconditionError(msg.str());
    }
}

double probability(const Effect& a, const DensityOperator& x) {
    check_same_dim(a.dim(), x.dim(), "probability");
    return (a.matrix() * x.matrix()).trace().real();
}

Effect complement(const Effect& a, const ToleranceConfig& tol) {
    return Effect(identity(a.dim()) - a.matrix(), tol);
}

DensityOperator mix(const Weights& w, const DensityOperator& x1, const DensityOperator& x2,
                    const ToleranceConfig& tol) {
    check_same_dim(x1.dim(), x2.dim(), "mix");
    return DensityOperator(w.c1_sq * x1.matrix() + w.c2_sq * x2.matrix(), tol);
}

double overlap(const DensityOperator& x1, const DensityOperator& x2) {
    check_same_dim(x1.dim(), x2.dim(), "overlap");
    return (x1.matrix() * x2.matrix()).trace().real();
}

bool are_orthogonal(const DensityOperator& x1, const DensityOperator& x2,
                    const ToleranceConfig& tol) {
    return overlap(x1, x2) <= tol.orth;
}

Effect support_projector(const DensityOperator& x, const ToleranceConfig& tol) {
    auto [vals, vecs] = hermitian_eig(x.matrix(), tol);
    ComplexMatrix p = zeros(x.dim(), x.dim());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) > tol.rank) {
            p += vecs.col(i) * vecs.col(i).adjoint();
        }
    }
    // Symmetrize away the last bits of solver noise.
    p = 0.5 * (p + p.adjoint().eval());
    return Effect(p, tol);
}

DensityOperator random_density_operator(int dim, Rng& rng, const ToleranceConfig& tol) {
    ComplexMatrix g = rng.ginibre(dim, dim);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    m = 0.5 * (m + m.adjoint().eval());
    return DensityOperator(m, tol);
}

DensityOperator random_pure_state(int dim, Rng& rng, const ToleranceConfig& tol) {
    ComplexVector v = rng.ginibre(dim, 1).col(0);
    return DensityOperator(projector(v), tol);
}

Effect random_effect(int dim, Rng& rng, const ToleranceConfig& tol) {
    ComplexMatrix g = rng.ginibre(dim, dim);
    ComplexMatrix h = 0.5 * (g + g.adjoint().eval());
    auto [vals, vecs] = hermitian_eig(h, tol);
    double lo = vals(vals.size() - 1);
    double hi = vals(0);
    if (hi - lo < 1e-12) {
        return Effect(0.5 * identity(dim), tol);
    }
    ComplexMatrix a = (h - lo * identity(dim)) / (hi - lo);
    a = 0.5 * (a + a.adjoint().eval());
    return Effect(a, tol);
}

}  // namespace qmv
