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

#include "qobs/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qobs {

std::vector<double> OperatorSubspace::coordinates(const ComplexMatrix& m) const {
    std::vector<double> coords(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j) coords[j] = hs_inner(m, basis_[j]).real();
    return coords;
}

ComplexMatrix OperatorSubspace::project_onto(const ComplexMatrix& m) const {
    ComplexMatrix proj = ComplexMatrix::Zero(dim_n_, dim_n_);
    for (const auto& f : basis_) proj += hs_inner(m, f).real() * f;
    return proj;
}

double OperatorSubspace::residual_norm(const ComplexMatrix& m) const {
    return frobenius_norm(m - project_onto(m));
}

bool OperatorSubspace::contains(const ComplexMatrix& m, double rank_tol) const {
    return residual_norm(m) <= rank_tol * std::max(1.0, frobenius_norm(m));
}

int OperatorSubspace::saturation_depth() const {
    return depth_tags_.empty() ? 0 : *std::max_element(depth_tags_.begin(), depth_tags_.end());
}

bool orthonormal_extend(OperatorSubspace& basis, const ComplexMatrix& candidate,
                        const Tolerance& tol, int depth) {
    tol.validate();
    detail::require(candidate.rows() == basis.dim_n_ && candidate.cols() == basis.dim_n_,
                    "orthonormal_extend: candidate dimension mismatch");
    const double scale = frobenius_norm(candidate);
    if (scale <= tol.rank_tol) return false;  // zero within tolerance
    detail::require(is_skew_hermitian(candidate, tol.rank_tol * scale),
                    "orthonormal_extend: candidate is not skew-Hermitian");

    // Two-pass modified Gram-Schmidt; the second pass recovers orthogonality
    // lost to cancellation when the candidate is nearly in span(basis).
    ComplexMatrix res = candidate;
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& f : basis.basis_) res -= hs_inner(res, f).real() * f;
    }
    const double res_norm = frobenius_norm(res);
    if (res_norm <= tol.rank_tol * scale) return false;

    if (basis.dim() >= basis.max_dim())
        throw std::runtime_error(
            "orthonormal_extend: basis would exceed dim su(n); residual is numerical noise");

    basis.basis_.push_back(res / res_norm);
    basis.depth_tags_.push_back(depth);
    return true;
}

}  // namespace qobs
