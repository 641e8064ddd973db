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

#ifndef QMV_TESTS_SUPPORT_HPP
#define QMV_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "qmv/quantum.hpp"

namespace qmv::testing {

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps = 1e-10) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= eps;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexVector ket_plus() {
    return (basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0);
}

inline ComplexVector ket_minus() {
    return (basis_ket(2, 0) - basis_ket(2, 1)) / std::sqrt(2.0);
}

/// Independent partial-trace oracle: direct basis-expansion sum, decoding
/// multi-indices entry by entry with div/mod (no precomputed index maps).
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, const std::vector<int>& dims,
                                          const std::set<int>& keep) {
    int total = 1;
    for (int d : dims) {
        total *= d;
    }
    auto digit = [&](int index, int factor) {
        int stride = 1;
        for (size_t f = static_cast<size_t>(factor) + 1; f < dims.size(); ++f) {
            stride *= dims[f];
        }
        return (index / stride) % dims[static_cast<size_t>(factor)];
    };
    auto kept_index = [&](int index) {
        int k = 0;
        for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
            if (keep.count(f)) {
                k = k * dims[static_cast<size_t>(f)] + digit(index, f);
            }
        }
        return k;
    };
    auto traced_index = [&](int index) {
        int t = 0;
        for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
            if (!keep.count(f)) {
                t = t * dims[static_cast<size_t>(f)] + digit(index, f);
            }
        }
        return t;
    };
    int kept_dim = 1;
    for (int f : keep) {
        kept_dim *= dims[static_cast<size_t>(f)];
    }
    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (int r = 0; r < total; ++r) {
        for (int c = 0; c < total; ++c) {
            if (traced_index(r) == traced_index(c)) {
                out(kept_index(r), kept_index(c)) += m(r, c);
            }
        }
    }
    return out;
}

/// Seeded Hermitian matrix (not spectrum-constrained).
inline ComplexMatrix random_hermitian(int dim, Rng& rng) {
    ComplexMatrix g = rng.ginibre(dim, dim);
    return 0.5 * (g + g.adjoint().eval());
}

/// A pair of orthogonal density operators with the given ranks: block
/// supports rotated by a shared Haar unitary to make them generic.
inline std::pair<DensityOperator, DensityOperator> random_orthogonal_pair(int dim, int rank1,
                                                                          int rank2, Rng& rng) {
    ComplexMatrix u = rng.haar_unitary(dim);
    auto block_state = [&](int offset, int rank) {
        ComplexMatrix g = rng.ginibre(rank, rank);
        ComplexMatrix small = g * g.adjoint();
        small /= small.trace().real();
        ComplexMatrix big = zeros(dim, dim);
        big.block(offset, offset, rank, rank) = small;
        ComplexMatrix rotated = u * big * u.adjoint();
        rotated = 0.5 * (rotated + rotated.adjoint().eval());
        return DensityOperator(rotated);
    };
    return {block_state(0, rank1), block_state(rank1, rank2)};
}

}  // namespace qmv::testing

#endif
