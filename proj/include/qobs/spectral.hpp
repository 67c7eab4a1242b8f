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

#ifndef QOBS_SPECTRAL_HPP
#define QOBS_SPECTRAL_HPP

#include <vector>

#include "qobs/matrix.hpp"

namespace qobs {

/// Clustered eigendecomposition of a Hermitian observable.
///
/// Eigenvalues closer than eig_tol are merged into one cluster; each cluster
/// carries the full eigenspace projector, so the decomposition is independent
/// of the arbitrary eigenvector basis the solver picks inside a degenerate
/// eigenspace.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;             // distinct values, ascending
    std::vector<ComplexMatrix> projectors;   // Hermitian, Pi_j Pi_k = delta_jk Pi_j
    std::vector<int> multiplicities;         // rank(Pi_j), sums to n

    int num_clusters() const { return static_cast<int>(multiplicities.size()); }
    int dim() const { return projectors.empty() ? 0 : static_cast<int>(projectors[0].rows()); }

    /// sum_j lambda_j Pi_j, which reconstructs the input up to clustering.
    ComplexMatrix reconstruct() const;
};

/// Eigendecomposition of a Hermitian matrix with eigenvalue clustering.
/// Throws std::invalid_argument if `s` is not Hermitian within eig_tol.
SpectralDecomposition spectral(const ComplexMatrix& s, const Tolerance& tol = {});

}  // namespace qobs

#endif  // QOBS_SPECTRAL_HPP
