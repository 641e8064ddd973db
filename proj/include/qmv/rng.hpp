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

#ifndef QMV_RNG_HPP
#define QMV_RNG_HPP

#include <cstdint>
#include <random>

#include "qmv/linalg.hpp"

namespace qmv {

/// Seeded random source for matrix sampling. Substreams derived from the
/// same parent seed with distinct stream ids are independent, so sweeps can
/// be split across workers without changing the drawn values.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_value_(seed) {}

    /// Child generator for stream `id`; deterministic in (seed, id).
    Rng substream(std::uint64_t id) const;

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }
    std::uint64_t seed() const { return seed_value_; }

    std::mt19937_64& engine() { return engine_; }

    /// Matrix with i.i.d. standard complex Gaussian entries.
    ComplexMatrix ginibre(int rows, int cols);

    /// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
    /// phases absorbed into Q.
    ComplexMatrix haar_unitary(int dim);

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_value_ = 0;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// SplitMix64 avalanche step.
std::uint64_t splitmix64(std::uint64_t z);

/// Counter-based uniform draw in [0, 1): a pure function of (seed, index),
/// identical on every platform. Used for trial sampling so that individual
/// trials can be recomputed or distributed without streaming state.
double counter_uniform(std::uint64_t seed, std::uint64_t index);

}  // namespace qmv

#endif
