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

#ifndef QMV_LINALG_HPP
#define QMV_LINALG_HPP

#include <complex>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmv/errors.hpp"
#include "qmv/tolerances.hpp"

namespace qmv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dimensions of the tensor factors of a composite space, object factor
/// first. Index semantics are row-major throughout: factor 0 varies slowest.
/// A full-space index R decomposes as R = sum_f r_f * prod_{g>f} d_g.
class DimensionLayout {
  public:
    DimensionLayout() = default;
    explicit DimensionLayout(std::vector<int> factor_dims);

    const std::vector<int>& factor_dims() const { return dims_; }
    int factor_dim(int f) const { return dims_.at(static_cast<size_t>(f)); }
    int num_factors() const { return static_cast<int>(dims_.size()); }
    int total_dim() const { return total_; }

    /// Decompose a full-space index into per-factor digits.
    std::vector<int> decompose(int index) const;
    /// Inverse of decompose.
    int compose(const std::vector<int>& digits) const;

    /// Throws DimensionError unless `m` is square of dimension total_dim().
    void check_matches(const ComplexMatrix& m, const char* what) const;

    bool operator==(const DimensionLayout& o) const { return dims_ == o.dims_; }

  private:
    std::vector<int> dims_;
    int total_ = 1;
};

// --------------------------------------------------------------------------
// Elementary constructors
// --------------------------------------------------------------------------

ComplexMatrix identity(int dim);
ComplexMatrix zeros(int rows, int cols);

/// Column vector for the computational basis state `index` in dimension d.
ComplexVector basis_ket(int dim, int index);

/// Rank-1 projector |v><v| / <v|v>.
ComplexMatrix projector(const ComplexVector& v);

/// Throws PreconditionError if any entry is NaN or infinite.
void check_finite(const ComplexMatrix& m, const char* what);

// --------------------------------------------------------------------------
// Core operations
// --------------------------------------------------------------------------

/// Kronecker product with `a`'s indices outermost.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Adjoint (conjugate transpose).
ComplexMatrix dagger(const ComplexMatrix& m);

/// Matrix product with explicit shape validation.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& m);

/// ||a - b||_F
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out every factor not in `keep`. The result lives on the kept
/// factors in ascending factor order; keep = {} yields the 1x1 matrix [Tr m].
/// Trace is preserved: Tr[result] = Tr[m].
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimensionLayout& layout,
                            const std::set<int>& keep);

/// Lift an operator acting on the factors in `factors` (ascending order) to
/// the full space, identity on the rest.
ComplexMatrix embed(const ComplexMatrix& op, const DimensionLayout& layout,
                    const std::vector<int>& factors);

/// Product of embeddings of operators on pairwise disjoint factor sets,
/// assembled in a single pass. Factor sets not mentioned act as identity.
ComplexMatrix embed_product(const std::map<std::vector<int>, ComplexMatrix>& ops,
                            const DimensionLayout& layout);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are returned in
/// descending order with matching eigenvector columns.
/// Throws PreconditionError if max |m - m+| exceeds tol.herm.
std::pair<RealVector, ComplexMatrix> hermitian_eig(const ComplexMatrix& m,
                                                   const ToleranceConfig& tol = {});

/// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const ComplexMatrix& m);

/// ||m m+ - I||_F
double unitarity_defect(const ComplexMatrix& m);

/// Positive-semidefinite square root via eigendecomposition; eigenvalues
/// below zero are clamped (they must exceed -tol.psd).
ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol = {});

}  // namespace qmv

#endif
