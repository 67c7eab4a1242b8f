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

#ifndef QOBS_SYSTEM_HPP
#define QOBS_SYSTEM_HPP

#include <string>
#include <vector>

#include "qobs/matrix.hpp"

namespace qobs {

/// Bilinear control system dρ/dt = [Σ_j u_j(t) B_j, ρ] observed through
/// y = Tr(S ρ). Generators B_j = iH_j are stored skew-Hermitian and traceless;
/// the observable is stored traceless with the removed constant recorded so
/// raw expectation values can be reported.
struct ControlSystem {
    int dim_n = 0;
    std::vector<ComplexMatrix> generators;
    ComplexMatrix observable;
    /// Tr(S_raw)/n removed from the raw observable. Outputs against a physical
    /// trace-t state differ from the traceless-form outputs by shift * t.
    double observable_shift = 0.0;
    std::string label;
};

/// Validates and normalizes the inputs: generators must be skew-Hermitian
/// (identity components are removed, they only contribute a global phase)
/// and the observable Hermitian. Both are traceless-shifted; the observable
/// shift is recorded. A shifted observable equal to zero is legal here and
/// rejected by the analyses that need S != 0.
/// Throws std::invalid_argument on violations.
ControlSystem make_control_system(const std::vector<ComplexMatrix>& generators,
                                  const ComplexMatrix& observable, const Tolerance& tol = {},
                                  std::string label = "");

}  // namespace qobs

#endif  // QOBS_SYSTEM_HPP
