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

#ifndef QOBS_SUBSPACE_HPP
#define QOBS_SUBSPACE_HPP

#include <vector>

#include "qobs/matrix.hpp"

namespace qobs {

/// A real subspace of su(n): an orthonormal (under the Hilbert-Schmidt inner
/// product) ordered basis of skew-Hermitian traceless matrices, with an
/// optional bracket-depth tag per element. Basis order is deterministic for a
/// fixed insertion sequence, so computed subspaces are reproducible.
class OperatorSubspace {
public:
    OperatorSubspace() = default;
    explicit OperatorSubspace(int dim_n) : dim_n_(dim_n) {
        detail::require(dim_n >= 1, "OperatorSubspace: ambient dimension must be >= 1");
    }

    int ambient_dim() const { return dim_n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int max_dim() const { return dim_n_ * dim_n_ - 1; }

    const std::vector<ComplexMatrix>& basis() const { return basis_; }
    const std::vector<int>& depth_tags() const { return depth_tags_; }
    const ComplexMatrix& element(int i) const { return basis_.at(static_cast<size_t>(i)); }

    /// Real coordinates of `m` against the basis, Re<m, F_j>.
    std::vector<double> coordinates(const ComplexMatrix& m) const;

    /// Orthogonal projection of `m` onto span(basis) using real coefficients.
    ComplexMatrix project_onto(const ComplexMatrix& m) const;

    /// Norm of m - project_onto(m).
    double residual_norm(const ComplexMatrix& m) const;

    /// residual_norm(m) <= rank_tol * max(1, |m|).
    bool contains(const ComplexMatrix& m, double rank_tol) const;

    /// Largest depth tag, i.e. the bracket depth at which the basis saturated.
    int saturation_depth() const;

private:
    friend bool orthonormal_extend(OperatorSubspace& basis, const ComplexMatrix& candidate,
                                   const Tolerance& tol, int depth);

    int dim_n_ = 0;
    std::vector<ComplexMatrix> basis_;
    std::vector<int> depth_tags_;
};

/// Appends the normalized residual of `candidate` against span(basis) when the
/// residual norm exceeds rank_tol * |candidate|; otherwise leaves the basis
/// unchanged. Candidates with norm <= rank_tol count as zero and are ignored.
/// Returns whether an element was added. Throws if `candidate` is not
/// skew-Hermitian or has the wrong dimension.
bool orthonormal_extend(OperatorSubspace& basis, const ComplexMatrix& candidate,
                        const Tolerance& tol = {}, int depth = 0);

}  // namespace qobs

#endif  // QOBS_SUBSPACE_HPP
