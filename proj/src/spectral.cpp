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

#include "qobs/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace qobs {

ComplexMatrix SpectralDecomposition::reconstruct() const {
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (int j = 0; j < num_clusters(); ++j) out += eigenvalues[j] * projectors[j];
    return out;
}

SpectralDecomposition spectral(const ComplexMatrix& s, const Tolerance& tol) {
    tol.validate();
    detail::require(s.rows() == s.cols() && s.rows() >= 1, "spectral: matrix must be square");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    detail::require(is_hermitian(s, tol.eig_tol * scale), "spectral: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectral: eigensolver failed to converge");

    const Eigen::VectorXd evals = solver.eigenvalues();  // ascending
    const ComplexMatrix evecs = solver.eigenvectors();
    const int n = static_cast<int>(s.rows());
    const double gap = tol.eig_tol * std::max(1.0, evals.cwiseAbs().maxCoeff());

    SpectralDecomposition out;
    std::vector<double> values;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && evals[end] - evals[end - 1] <= gap) ++end;
        const int mult = end - start;
        ComplexMatrix proj = ComplexMatrix::Zero(n, n);
        double mean = 0.0;
        for (int i = start; i < end; ++i) {
            proj += evecs.col(i) * evecs.col(i).adjoint();
            mean += evals[i];
        }
        values.push_back(mean / mult);
        out.projectors.push_back(std::move(proj));
        out.multiplicities.push_back(mult);
        start = end;
    }
    out.eigenvalues = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<long>(values.size()));
    return out;
}

}  // namespace qobs
