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

#include "qobs/gellmann.hpp"

#include <cmath>
#include <stdexcept>

namespace qobs {

std::vector<ComplexMatrix> gell_mann_basis(int n) {
    detail::require(n >= 2, "gell_mann_basis: dimension must be at least 2");
    const Complex I(0.0, 1.0);
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(n) * n - 1);
    for (int l = 1; l < n; ++l) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        for (int m = 0; m < l; ++m) d(m, m) = Complex(1.0, 0.0);
        d(l, l) = Complex(-static_cast<double>(l), 0.0);
        basis.push_back(I / std::sqrt(static_cast<double>(l) * (l + 1)) * d);
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            ComplexMatrix sym = ComplexMatrix::Zero(n, n);
            sym(j, k) = I * inv_sqrt2;
            sym(k, j) = I * inv_sqrt2;
            basis.push_back(sym);
            ComplexMatrix asym = ComplexMatrix::Zero(n, n);
            asym(j, k) = Complex(inv_sqrt2, 0.0);
            asym(k, j) = Complex(-inv_sqrt2, 0.0);
            basis.push_back(asym);
        }
    }
    return basis;
}

}  // namespace qobs
