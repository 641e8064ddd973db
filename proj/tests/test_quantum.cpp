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

#include <doctest.h>

#include "qmv/quantum.hpp"
#include "support.hpp"

using namespace qmv;
using namespace qmv::testing;

namespace {

DensityOperator ket_state(const ComplexVector& v) {
    return DensityOperator(projector(v));
}

}  // namespace

TEST_CASE("state and effect constructors enforce their invariants") {
    CHECK_THROWS_AS(DensityOperator(mat2(1, 1, 0, 1)), PreconditionError);   // not Hermitian
    CHECK_THROWS_AS(DensityOperator(mat2(2, 0, 0, -1)), PreconditionError);  // not PSD
    CHECK_THROWS_AS(DensityOperator(mat2(0.7, 0, 0, 0.7)), PreconditionError);  // trace != 1
    CHECK_NOTHROW(DensityOperator(0.5 * identity(2)));

    CHECK_THROWS_AS(Effect(mat2(1.5, 0, 0, 0)), PreconditionError);  // eigenvalue above 1
    CHECK_THROWS_AS(Effect(mat2(-0.1, 0, 0, 0.5)), PreconditionError);
    CHECK_NOTHROW(Effect(mat2(1, 0, 0, 0)));

    CHECK_THROWS_AS(Weights(0.5, 0.6), PreconditionError);
    CHECK_NOTHROW(Weights(0.36, 0.64));
}

TEST_CASE("probability: unit observable, basis states, overlap") {
    Rng rng(1);
    Effect unit = Effect::identity_effect(3);
    for (int i = 0; i < 10; ++i) {
        DensityOperator x = random_density_operator(3, rng);
        CHECK(probability(unit, x) == doctest::Approx(1.0));
    }

    DensityOperator zero = ket_state(basis_ket(2, 0));
    CHECK(probability(Effect(projector(basis_ket(2, 0))), zero) == doctest::Approx(1.0));

    // <+|0><0|+> expands to 1/2.
    DensityOperator plus = ket_state(ket_plus());
    CHECK(probability(Effect(projector(basis_ket(2, 0))), plus) == doctest::Approx(0.5));

    CHECK_THROWS_AS(probability(Effect::identity_effect(2), random_density_operator(3, rng)),
                    DimensionError);
}

TEST_CASE("probability stays within [0,1] on random pairs") {
    Rng rng(2);
    ToleranceConfig tol;
    for (int i = 0; i < 50; ++i) {
        int dim = 2 + static_cast<int>(rng.uniform() * 5);
        Effect a = random_effect(dim, rng);
        DensityOperator x = random_density_operator(dim, rng);
        double p = probability(a, x);
        CHECK(p >= -tol.psd);
        CHECK(p <= 1.0 + tol.psd);
    }
}

TEST_CASE("complement: unit, involution, basis case, probability sum") {
    Effect unit = Effect::identity_effect(2);
    CHECK(approx_equal(complement(unit).matrix(), zeros(2, 2)));

    Rng rng(3);
    Effect a = random_effect(4, rng);
    CHECK(approx_equal(complement(complement(a)).matrix(), a.matrix(), 1e-12));

    CHECK(approx_equal(complement(Effect(projector(basis_ket(2, 0)))).matrix(),
                       projector(basis_ket(2, 1))));

    ToleranceConfig tol;
    for (int i = 0; i < 25; ++i) {
        Effect e = random_effect(3, rng);
        DensityOperator x = random_density_operator(3, rng);
        CHECK(std::abs(probability(e, x) + probability(complement(e), x) - 1.0) <= tol.prob);
    }
}

TEST_CASE("mix: degenerate weights, flat mixture, affinity of probability") {
    DensityOperator x1 = ket_state(basis_ket(2, 0));
    DensityOperator x2 = ket_state(basis_ket(2, 1));

    CHECK(approx_equal(mix(Weights(1, 0), x1, x2).matrix(), x1.matrix()));
    CHECK(approx_equal(mix(Weights(0.5, 0.5), x1, x2).matrix(), 0.5 * identity(2)));

    Rng rng(4);
    Weights w(0.36, 0.64);
    for (int i = 0; i < 25; ++i) {
        DensityOperator a = random_density_operator(3, rng);
        DensityOperator b = random_density_operator(3, rng);
        Effect e = random_effect(3, rng);
        double lhs = probability(e, mix(w, a, b));
        double rhs = 0.36 * probability(e, a) + 0.64 * probability(e, b);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("orthogonality detection") {
    DensityOperator x0 = ket_state(basis_ket(2, 0));
    DensityOperator x1 = ket_state(basis_ket(2, 1));
    DensityOperator plus = ket_state(ket_plus());

    CHECK(are_orthogonal(x0, x1));
    CHECK(!are_orthogonal(x0, x0));
    CHECK(!are_orthogonal(x0, plus));
    CHECK(overlap(x0, plus) == doctest::Approx(0.5));

    Rng rng(5);
    auto [a, b] = random_orthogonal_pair(5, 2, 2, rng);
    CHECK(are_orthogonal(a, b));
}

TEST_CASE("support projector: purity, full rank, idempotency, certainty") {
    DensityOperator x0 = ket_state(basis_ket(2, 0));
    CHECK(approx_equal(support_projector(x0).matrix(), projector(basis_ket(2, 0)), 1e-10));

    DensityOperator flat(0.5 * identity(2));
    CHECK(approx_equal(support_projector(flat).matrix(), identity(2), 1e-10));

    Rng rng(6);
    ToleranceConfig tol;
    for (int i = 0; i < 10; ++i) {
        DensityOperator x = random_density_operator(4, rng);
        Effect p = support_projector(x);
        CHECK(frobenius_distance(p.matrix() * p.matrix(), p.matrix()) < tol.recon);
        CHECK(std::abs(probability(p, x) - 1.0) < tol.prob);
    }
}

TEST_CASE("support projector discriminates orthogonal states") {
    Rng rng(7);
    ToleranceConfig tol;
    for (int i = 0; i < 10; ++i) {
        auto [x1, x2] = random_orthogonal_pair(6, 2, 3, rng);
        Effect p = support_projector(x1);
        double p1 = probability(p, x1);
        double p2 = probability(p, x2);
        CHECK(std::abs(p1 - p2) >= 1.0 - 2 * tol.prob);
        CHECK(p2 <= tol.prob);
    }
}

TEST_CASE("random generators produce valid, reproducible elements") {
    Rng a(99);
    Rng b(99);
    CHECK(approx_equal(random_density_operator(3, a).matrix(),
                       random_density_operator(3, b).matrix(), 0.0));
    CHECK(approx_equal(random_effect(3, a).matrix(), random_effect(3, b).matrix(), 0.0));

    Rng rng(100);
    for (int i = 0; i < 5; ++i) {
        CHECK_NOTHROW(random_density_operator(5, rng));
        CHECK_NOTHROW(random_effect(5, rng));
        CHECK(random_pure_state(5, rng).is_pure());
    }
}

TEST_CASE("pure_vector extracts a deterministic representative") {
    Rng rng(101);
    DensityOperator x = random_pure_state(4, rng);
    ComplexVector v = x.pure_vector();
    CHECK(approx_equal(projector(v), x.matrix(), 1e-9));
    CHECK_THROWS_AS(DensityOperator(0.5 * identity(2)).pure_vector(), PreconditionError);
}
