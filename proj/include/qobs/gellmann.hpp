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

#ifndef QOBS_GELLMANN_HPP
#define QOBS_GELLMANN_HPP

#include <vector>

#include "qobs/matrix.hpp"

namespace qobs {

/// Orthonormal reference basis of su(n): skew-Hermitian traceless matrices,
/// orthonormal under the Hilbert-Schmidt inner product (generalized Gell-Mann
/// matrices times i). Canonical order:
///   1. diagonal elements D_l, l = 1..n-1, with
///      D_l = i diag(1,...,1,-l,0,...,0) / sqrt(l(l+1)) (l ones);
///   2. for each pair j < k in row-major order, the symmetric element
///      i(E_jk + E_kj)/sqrt(2) followed by the antisymmetric (E_jk - E_kj)/sqrt(2).
/// Total n^2 - 1 elements.
std::vector<ComplexMatrix> gell_mann_basis(int n);

}  // namespace qobs

#endif  // QOBS_GELLMANN_HPP
