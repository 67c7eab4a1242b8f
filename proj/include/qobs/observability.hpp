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

#ifndef QOBS_OBSERVABILITY_HPP
#define QOBS_OBSERVABILITY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qobs/lie.hpp"
#include "qobs/matrix.hpp"
#include "qobs/subspace.hpp"
#include "qobs/system.hpp"

namespace qobs {

/// Full verdict sheet for one system. dims_Vk[i] is the dimension of V_{i+1};
/// the list runs from k = 1 to the verified fixpoint, or to max_k when the
/// recursion was cut off first (then `saturated` is false and
/// observable_overall only reflects the computed range).
struct ObservabilityReport {
    int dim_n = 0;
    int dim_L = 0;
    std::vector<int> dims_Vk;
    int saturation_k = 0;
    bool saturated = false;
    bool controllable = false;
    bool observable_one_step = false;
    std::vector<bool> observable_k;
    bool observable_overall = false;
    bool first_order_condition = false;
    /// (dim [iS, L], dim [iS, su(n)]), both computed as bracket spans.
    std::pair<int, int> prop4_dims{0, 0};
};

/// Runs the V_k recursion to its fixpoint (or max_k), then fills every
/// verdict: controllable iff dim L = n^2-1, observable in k steps iff
/// dim V_k = n^2-1, observable overall iff some computed V_k is all of su(n).
/// The first-order flag (equality of the bracket spans) is sufficient but not
/// necessary for one-step observability; a false flag never downgrades the
/// other verdicts.
ObservabilityReport analyze(const ControlSystem& sys, int max_k, const Tolerance& tol = {});

struct IndistinguishabilityVerdict {
    bool indistinguishable = false;
    int k_used = 0;
    /// Largest |Tr(F (rho1-rho2))| over the V_k basis; near-threshold values
    /// flag marginal calls.
    double max_coordinate = 0.0;
};

/// True iff rho1 - rho2 is orthogonal to V_k, i.e. no k-measurement
/// experiment separates the two states. Inputs are Hermitian traceless
/// (already shifted) matrices.
IndistinguishabilityVerdict indistinguishable(const ControlSystem& sys,
                                              const ComplexMatrix& rho1,
                                              const ComplexMatrix& rho2, int k,
                                              const Tolerance& tol = {});

struct FirstOrderVerdict {
    bool holds = false;
    int dim_bracket_algebra = 0;
    int dim_bracket_full = 0;
};

/// Compares dim [iS, L] with dim [iS, su(n)]. Equality is a first-order
/// sufficient condition for one-step observability.
FirstOrderVerdict first_order_condition(const ControlSystem& sys, const Tolerance& tol = {});

/// Splits a Hermitian matrix into the component whose i-image lies in the
/// given subspace and the orthogonal remainder. Outputs whose i-image lies in
/// V_k carry all of the state's influence on k-step measurements.
struct StateDecomposition {
    ComplexMatrix rho_par;
    ComplexMatrix rho_perp;
    int k_used = 0;
};

StateDecomposition decompose_state(const ComplexMatrix& rho, const OperatorSubspace& vk,
                                   const Tolerance& tol = {}, int k_used = 0);

/// Conjugates rho0 by random words exp(sum_j u_j B_j)···; the first sample is
/// the empty word (rho0 itself). Word lengths are 1..8, coefficients uniform
/// in (-1, 1), generated by a fixed-seed generator without
/// platform-dependent distributions. Sampling is test evidence only; verdicts
/// come from the algebraic conditions.
std::vector<ComplexMatrix> orbit_sample(const ControlSystem& sys, const ComplexMatrix& rho0,
                                        int count, std::uint64_t seed);

}  // namespace qobs

#endif  // QOBS_OBSERVABILITY_HPP
