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

#include "qmv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qmv {

DimensionLayout::DimensionLayout(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
    if (dims_.empty()) {
        throw DimensionError("DimensionLayout: at least one factor required");
    }
    for (int d : dims_) {
        if (d < 1) {
            throw DimensionError("DimensionLayout: factor dimensions must be positive");
        }
    }
    total_ = 1;
    for (int d : dims_) {
        total_ *= d;
    }
}

std::vector<int> DimensionLayout::decompose(int index) const {
    std::vector<int> digits(dims_.size());
    for (int f = num_factors() - 1; f >= 0; --f) {
        digits[static_cast<size_t>(f)] = index % dims_[static_cast<size_t>(f)];
        index /= dims_[static_cast<size_t>(f)];
    }
    return digits;
}

int DimensionLayout::compose(const std::vector<int>& digits) const {
    int index = 0;
    for (size_t f = 0; f < dims_.size(); ++f) {
        index = index * dims_[f] + digits[f];
    }
    return index;
}

void DimensionLayout::check_matches(const ComplexMatrix& m, const char* what) const {
    if (m.rows() != m.cols() || m.rows() != total_) {
        std::ostringstream msg;
        msg << what << ": operator is " << m.rows() << "x" << m.cols()
            << " but the layout spans dimension " << total_;
        throw DimensionError(msg.str());
    }
}

ComplexMatrix identity(int dim) {
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix zeros(int rows, int cols) {
    return ComplexMatrix::Zero(rows, cols);
}

ComplexVector basis_ket(int dim, int index) {
    if (index < 0 || index >= dim) {
        throw DimensionError("basis_ket: index out of range");
    }
    ComplexVector v = ComplexVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

ComplexMatrix projector(const ComplexVector& v) {
    double n2 = v.squaredNorm();
    if (n2 <= 0.0) {
        throw PreconditionError("projector: zero vector");
    }
    return (v * v.adjoint()) / n2;
}

void check_finite(const ComplexMatrix& m, const char* what) {
    if (!m.allFinite()) {
        throw PreconditionError(std::string(what) + ": non-finite entries");
    }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
    return m.adjoint();
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "mat_mul: inner dimensions differ (" << a.cols() << " vs " << b.rows() << ")";
        throw DimensionError(msg.str());
    }
    return a * b;
}

Complex trace(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("trace: matrix not square");
    }
    return m.trace();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("frobenius_distance: shape mismatch");
    }
    return (a - b).norm();
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionLayout& layout,
                            const std::set<int>& keep) {
    layout.check_matches(m, "partial_trace");
    for (int f : keep) {
        if (f < 0 || f >= layout.num_factors()) {
            throw DimensionError("partial_trace: kept factor index out of range");
        }
    }

    const int total = layout.total_dim();
    int kept_dim = 1;
    for (int f : keep) {
        kept_dim *= layout.factor_dim(f);
    }

    // For each full index, its projection onto the kept and traced factors.
    std::vector<int> kept_part(static_cast<size_t>(total));
    std::vector<int> traced_part(static_cast<size_t>(total));
    for (int r = 0; r < total; ++r) {
        auto digits = layout.decompose(r);
        int k = 0, t = 0;
        for (int f = 0; f < layout.num_factors(); ++f) {
            if (keep.count(f)) {
                k = k * layout.factor_dim(f) + digits[static_cast<size_t>(f)];
            } else {
                t = t * layout.factor_dim(f) + digits[static_cast<size_t>(f)];
            }
        }
        kept_part[static_cast<size_t>(r)] = k;
        traced_part[static_cast<size_t>(r)] = t;
    }

    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (int r = 0; r < total; ++r) {
        for (int c = 0; c < total; ++c) {
            if (traced_part[static_cast<size_t>(r)] == traced_part[static_cast<size_t>(c)]) {
                out(kept_part[static_cast<size_t>(r)], kept_part[static_cast<size_t>(c)]) += m(r, c);
            }
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const DimensionLayout& layout,
                    const std::vector<int>& factors) {
    std::map<std::vector<int>, ComplexMatrix> ops;
    ops.emplace(factors, op);
    return embed_product(ops, layout);
}

ComplexMatrix embed_product(const std::map<std::vector<int>, ComplexMatrix>& ops,
                            const DimensionLayout& layout) {
    const int total = layout.total_dim();
    const int n = layout.num_factors();

    std::vector<bool> used(static_cast<size_t>(n), false);
    for (const auto& [factors, op] : ops) {
        if (factors.empty() || !std::is_sorted(factors.begin(), factors.end()) ||
            std::adjacent_find(factors.begin(), factors.end()) != factors.end()) {
            throw DimensionError("embed_product: factor sets must be nonempty, sorted, distinct");
        }
        int sub_dim = 1;
        for (int f : factors) {
            if (f < 0 || f >= n) {
                throw DimensionError("embed_product: factor index out of range");
            }
            if (used[static_cast<size_t>(f)]) {
                throw DimensionError("embed_product: factor sets overlap");
            }
            used[static_cast<size_t>(f)] = true;
            sub_dim *= layout.factor_dim(f);
        }
        if (op.rows() != sub_dim || op.cols() != sub_dim) {
            std::ostringstream msg;
            msg << "embed_product: operator is " << op.rows() << "x" << op.cols()
                << " but its factors span dimension " << sub_dim;
            throw DimensionError(msg.str());
        }
    }

    // Precompute, per full index, its sub-index within each operator's factor
    // set and the joint index over all remaining factors.
    const size_t k = ops.size();
    std::vector<std::vector<int>> sub(k, std::vector<int>(static_cast<size_t>(total)));
    std::vector<int> rest(static_cast<size_t>(total));
    for (int r = 0; r < total; ++r) {
        auto digits = layout.decompose(r);
        size_t oi = 0;
        for (const auto& [factors, op] : ops) {
            int s = 0;
            for (int f : factors) {
                s = s * layout.factor_dim(f) + digits[static_cast<size_t>(f)];
            }
            sub[oi][static_cast<size_t>(r)] = s;
            ++oi;
        }
        int t = 0;
        for (int f = 0; f < n; ++f) {
            if (!used[static_cast<size_t>(f)]) {
                t = t * layout.factor_dim(f) + digits[static_cast<size_t>(f)];
            }
        }
        rest[static_cast<size_t>(r)] = t;
    }

    std::vector<const ComplexMatrix*> mats;
    mats.reserve(k);
    for (const auto& [factors, op] : ops) {
        mats.push_back(&op);
    }

    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    for (int r = 0; r < total; ++r) {
        for (int c = 0; c < total; ++c) {
            if (rest[static_cast<size_t>(r)] != rest[static_cast<size_t>(c)]) {
                continue;
            }
            Complex v = 1.0;
            for (size_t oi = 0; oi < k; ++oi) {
                v *= (*mats[oi])(sub[oi][static_cast<size_t>(r)], sub[oi][static_cast<size_t>(c)]);
            }
            out(r, c) = v;
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("hermiticity_defect: matrix not square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("unitarity_defect: matrix not square");
    }
    return (m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
}

std::pair<RealVector, ComplexMatrix> hermitian_eig(const ComplexMatrix& m,
                                                   const ToleranceConfig& tol) {
    check_finite(m, "hermitian_eig");
    double defect = hermiticity_defect(m);
    if (defect > tol.herm) {
        std::ostringstream msg;
        msg << "hermitian_eig: input not Hermitian (defect " << defect << " > " << tol.herm << ")";
        throw PreconditionError(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("hermitian_eig: eigensolver failed to converge");
    }
    // Eigen returns ascending order; flip to descending.
    RealVector vals = solver.eigenvalues().reverse();
    ComplexMatrix vecs = solver.eigenvectors().rowwise().reverse();
    return {vals, vecs};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol) {
    auto [vals, vecs] = hermitian_eig(m, tol);
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -tol.psd) {
            std::ostringstream msg;
            msg << "psd_sqrt: negative eigenvalue " << vals(i);
            throw PreconditionError(msg.str());
        }
    }
    RealVector roots = vals.cwiseMax(0.0).cwiseSqrt();
    return vecs * roots.asDiagonal() * vecs.adjoint();
}

}  // namespace qmv
