// Copyright 2026 The qobs authors
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

#include "qobs/examples.hpp"
#include "qobs/gellmann.hpp"
#include "qobs/lie.hpp"
#include "qobs/spectral.hpp"
#include "support.hpp"

using namespace qobs;

namespace {

const Complex kI(0.0, 1.0);

ControlSystem random_system(int n, int num_generators, std::mt19937_64& rng) {
    std::vector<ComplexMatrix> gens;
    for (int j = 0; j < num_generators; ++j)
        gens.push_back(support::random_skew_traceless(n, rng));
    return make_control_system(gens, support::random_hermitian(n, rng));
}

bool same_space(const OperatorSubspace& a, const OperatorSubspace& b, double rank_tol) {
    if (a.dim() != b.dim()) return false;
    for (const auto& f : a.basis())
        if (!b.contains(f, rank_tol)) return false;
    for (const auto& f : b.basis())
        if (!a.contains(f, rank_tol)) return false;
    return true;
}

}  // namespace

TEST_CASE("coupled two-spin algebra has dimension three with the expected directions") {
    const ControlSystem sys = ising_system();
    const OperatorSubspace algebra = dynamical_algebra(sys);
    CHECK(algebra.dim() == 3);
    const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
    CHECK(algebra.contains(kI * kron(spin_z(), spin_z()), 1e-10));
    CHECK(algebra.contains(kI * kron(spin_x(), id2), 1e-10));
    CHECK(algebra.contains(kI * kron(spin_y(), spin_z()), 1e-10));
    CHECK_FALSE(algebra.contains(kI * kron(id2, spin_x()), 1e-10));
}

TEST_CASE("dynamical algebra is independent of generator order") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 3 + trial % 2;
        ControlSystem sys = random_system(n, 2, rng);
        ControlSystem reversed = sys;
        std::reverse(reversed.generators.begin(), reversed.generators.end());
        const OperatorSubspace a = dynamical_algebra(sys);
        const OperatorSubspace b = dynamical_algebra(reversed);
        CHECK(same_space(a, b, 1e-9));
    }
}

TEST_CASE("dynamical algebra basis is reproducible for a fixed generator order") {
    std::mt19937_64 rng(302);
    const ControlSystem sys = random_system(3, 2, rng);
    const OperatorSubspace a = dynamical_algebra(sys);
    const OperatorSubspace b = dynamical_algebra(sys);
    REQUIRE(a.dim() == b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        CHECK((a.element(i).array() == b.element(i).array()).all());
        CHECK(a.depth_tags()[static_cast<size_t>(i)] == b.depth_tags()[static_cast<size_t>(i)]);
    }
}

TEST_CASE("dynamical algebra matches a from-scratch bracket closure") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 3; ++trial) {
        const ControlSystem sys = random_system(2 + trial, 2, rng);
        const OperatorSubspace algebra = dynamical_algebra(sys);
        const auto oracle = support::bracket_closure_oracle(sys.generators, sys.generators);
        CHECK(algebra.dim() == support::real_span_rank(oracle));
    }
}

TEST_CASE("stabilized space contains its seeds and is bracket-stable") {
    std::mt19937_64 rng(304);
    const ControlSystem sys = random_system(3, 2, rng);
    const OperatorSubspace algebra = dynamical_algebra(sys);
    const ComplexMatrix is = kI * sys.observable;
    const OperatorSubspace v = stabilize({is}, algebra);
    CHECK(v.contains(is, 1e-10));
    for (const auto& f : v.basis())
        for (const auto& a : algebra.basis())
            CHECK(v.contains(commutator(a, f), 1e-9));
}

TEST_CASE("stabilize rejects all-zero seeds") {
    std::mt19937_64 rng(305);
    const ControlSystem sys = random_system(2, 1, rng);
    const OperatorSubspace algebra = dynamical_algebra(sys);
    const ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    CHECK_THROWS_AS(stabilize({zero, zero}, algebra), std::domain_error);
}

TEST_CASE("observability space dimension matches the closure oracle") {
    std::mt19937_64 rng(306);
    std::vector<ControlSystem> systems = {tilted_spin_system(), ising_system(),
                                          three_level_system(), random_system(3, 2, rng)};
    for (const auto& sys : systems) {
        const OperatorSubspace v = observability_space(sys);
        const auto algebra = support::bracket_closure_oracle(sys.generators, sys.generators);
        const auto closure =
            support::bracket_closure_oracle({kI * sys.observable}, algebra);
        CHECK(v.dim() == support::real_span_rank(closure));
    }
}

TEST_CASE("observability space rejects a zero observable") {
    std::mt19937_64 rng(307);
    const ControlSystem sys = make_control_system(
        {support::random_skew_traceless(3, rng)}, ComplexMatrix::Identity(3, 3));
    CHECK(frobenius_norm(sys.observable) < 1e-12);
    CHECK_THROWS_AS(observability_space(sys), std::domain_error);
}

TEST_CASE("commutator dimension agrees with the multiplicity formula and a direct span") {
    std::mt19937_64 rng(308);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + trial % 4;
        const int clusters = 1 + static_cast<int>(support::unit(rng) * n) % n;
        const ComplexMatrix s =
            support::random_clustered_hermitian(n, std::max(2, clusters), rng);
        const int via_formula = support::commutator_formula_oracle(s);
        CHECK(commutator_dimension(s) == via_formula);
        std::vector<ComplexMatrix> brackets;
        for (const auto& e : support::su_directions_oracle(n))
            brackets.push_back(commutator(kI * s, e));
        CHECK(support::real_span_rank(brackets) == via_formula);
    }
}

TEST_CASE("commutator dimension rejects scalar observables") {
    CHECK_THROWS_AS(commutator_dimension(2.5 * ComplexMatrix::Identity(3, 3)),
                    std::domain_error);
}

TEST_CASE("bracket span against the reference basis has the formula dimension") {
    std::mt19937_64 rng(309);
    const ComplexMatrix s = support::random_clustered_hermitian(4, 2, rng);
    const OperatorSubspace span = bracket_span(s, gell_mann_basis(4));
    CHECK(span.dim() == support::commutator_formula_oracle(s));
}

TEST_CASE("zero-step space is the observable line") {
    const ControlSystem sys = three_level_system();
    const OperatorSubspace v0 = generalized_observability_space(sys, 0);
    CHECK(v0.dim() == 1);
    CHECK(v0.contains(kI * sys.observable, 1e-12));
}

TEST_CASE("multi-step spaces are nested and stop at a fixpoint") {
    std::mt19937_64 rng(310);
    for (int trial = 0; trial < 4; ++trial) {
        const ControlSystem sys = random_system(2 + trial % 3, 2, rng);
        const ObservabilityChain chain = observability_chain(sys, 6);
        REQUIRE(!chain.spaces.empty());
        for (size_t k = 0; k + 1 < chain.spaces.size(); ++k) {
            CHECK(chain.spaces[k].dim() < chain.spaces[k + 1].dim());
            for (const auto& f : chain.spaces[k].basis())
                CHECK(chain.spaces[k + 1].contains(f, 1e-9));
        }
    }
}

TEST_CASE("full one-step space saturates immediately") {
    const ControlSystem sys = tilted_spin_system();
    const ObservabilityChain chain = observability_chain(sys, 5);
    CHECK(chain.spaces.size() == 1);
    CHECK(chain.spaces[0].dim() == 3);
    CHECK(chain.saturated);
}

TEST_CASE("coupled two-spin chain saturates below the full space") {
    const ControlSystem sys = ising_system();
    const ObservabilityChain chain = observability_chain(sys, 4);
    CHECK(chain.saturated);
    CHECK(chain.spaces.back().dim() == 4);
    CHECK(chain.spaces.back().dim() < chain.spaces.back().max_dim());
}

TEST_CASE("projector channel reproduces the measurement back-action route") {
    // A channel whose operators are the observable's eigenprojectors has a
    // dual equal to the projection map itself, so both recursions must agree.
    for (const ControlSystem& sys : {three_level_system(), ising_system()}) {
        const SpectralDecomposition dec = spectral(sys.observable);
        KrausChannel channel;
        for (const auto& pi : dec.projectors) channel.operators.push_back(pi);
        validate_kraus(channel);
        const ObservabilityChain plain = observability_chain(sys, 4);
        const ObservabilityChain dual = observability_chain(sys, 4, &channel);
        REQUIRE(plain.spaces.size() == dual.spaces.size());
        for (size_t k = 0; k < plain.spaces.size(); ++k)
            CHECK(same_space(plain.spaces[k], dual.spaces[k], 1e-9));
        CHECK(plain.saturated == dual.saturated);
    }
}

TEST_CASE("single-step space from the chain matches the direct computation") {
    std::mt19937_64 rng(311);
    const ControlSystem sys = random_system(3, 2, rng);
    const OperatorSubspace direct = observability_space(sys);
    const OperatorSubspace via_k = generalized_observability_space(sys, 1);
    CHECK(same_space(direct, via_k, 1e-10));
}
