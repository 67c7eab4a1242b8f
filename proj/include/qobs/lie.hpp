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

#ifndef QOBS_LIE_HPP
#define QOBS_LIE_HPP

#include <vector>

#include "qobs/matrix.hpp"
#include "qobs/measurement.hpp"
#include "qobs/subspace.hpp"
#include "qobs/system.hpp"

namespace qobs {

/// Smallest bracket-closed subspace containing the system generators (the
/// dynamical Lie algebra). Candidates are processed in insertion order times
/// generator order, so the basis is reproducible run to run. Depth tags:
/// generators 0, a bracket one more than the element it came from.
OperatorSubspace dynamical_algebra(const ControlSystem& sys, const Tolerance& tol = {});

/// Smallest subspace containing span(seeds) that is stable under bracketing
/// with `algebra`. Seeds carry depth 0. Throws std::domain_error when every
/// seed is zero within tolerance.
OperatorSubspace stabilize(const std::vector<ComplexMatrix>& seeds,
                           const OperatorSubspace& algebra, const Tolerance& tol = {});

/// stabilize({iS}, dynamical_algebra(sys)): the span of all iterated brackets
/// of iS with the algebra. Its orthocomplement holds exactly the state
/// differences that one measurement step cannot detect. Throws
/// std::domain_error for a zero observable.
OperatorSubspace observability_space(const ControlSystem& sys, const Tolerance& tol = {});

/// The k-step recursion V_1, V_2, ... where V_1 = observability_space and
/// V_k is the stabilization of the previous space's image under the
/// measurement back-action (Von Neumann projection onto the observable's
/// eigenspaces, or a Kraus dual when a channel is given).
struct ObservabilityChain {
    OperatorSubspace algebra;
    /// V_1 .. V_m with m <= max_k; stops early at a verified fixpoint.
    std::vector<OperatorSubspace> spaces;
    /// True when the last entry was verified equal to its successor (or is
    /// all of su(n) in the Von Neumann case, which is always a fixpoint).
    bool saturated = false;
};

ObservabilityChain observability_chain(const ControlSystem& sys, int max_k,
                                       const KrausChannel* channel = nullptr,
                                       const Tolerance& tol = {});

/// V_k for one k. k = 0 returns span{iS} (the zeroth-order space, no
/// evolution). Kraus duals need not preserve tracelessness, so their images
/// are traceless-shifted before insertion; the shift is invisible against
/// traceless state differences.
OperatorSubspace generalized_observability_space(const ControlSystem& sys, int k,
                                                 const KrausChannel* channel = nullptr,
                                                 const Tolerance& tol = {});

/// dim [iS, su(n)] from the spectral multiplicities n_j of S:
/// n^2 - sum_j n_j^2. Matches the dimension of the directly computed bracket
/// span. Throws std::domain_error when S is scalar.
int commutator_dimension(const ComplexMatrix& s, const Tolerance& tol = {});

/// span{[iS, E] : E in directions} for skew-Hermitian directions. Used with
/// the full su(n) reference basis or with an algebra's basis.
OperatorSubspace bracket_span(const ComplexMatrix& s,
                              const std::vector<ComplexMatrix>& directions,
                              const Tolerance& tol = {});

}  // namespace qobs

#endif  // QOBS_LIE_HPP
