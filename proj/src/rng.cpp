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

#include "qmv/rng.hpp"

#include <cmath>

namespace qmv {

Rng Rng::substream(std::uint64_t id) const {
    return Rng(splitmix64(seed_value_ ^ splitmix64(id + 0x51ed2701)));
}

ComplexMatrix Rng::ginibre(int rows, int cols) {
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            g(i, j) = Complex(normal(), normal());
        }
    }
    return g;
}

ComplexMatrix Rng::haar_unitary(int dim) {
    ComplexMatrix g = ginibre(dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR so the distribution is Haar.
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t h = splitmix64(splitmix64(seed) ^ (index * 0x9e3779b97f4a7c15ULL + 1));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace qmv
