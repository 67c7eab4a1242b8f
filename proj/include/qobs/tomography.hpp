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

#ifndef QOBS_TOMOGRAPHY_HPP
#define QOBS_TOMOGRAPHY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "qobs/matrix.hpp"
#include "qobs/measurement.hpp"
#include "qobs/system.hpp"

namespace qobs {

/// Unitary permutation matrix sending basis vector e_k to e_{perm[k]}.
/// Conjugating a diagonal observable by it permutes the diagonal:
/// (X* S X)_{kk} = S_{perm[k],perm[k]}.
ComplexMatrix permutation_unitary(const std::vector<int>& perm);

/// One-line cycle notation, fixed points omitted; "()" for the identity.
std::string cycle_notation(const std::vector<int>& perm);

/// Measurement design for reconstructing the diagonal of a frame-rotated
/// state: a set of permutations of the observable's diagonal whose rows,
/// together with the all-ones trace row, have full column rank n.
struct PermutationDesign {
    /// Diagonal traceless observable the rows are built from.
    ComplexMatrix base_observable;
    /// First entry is the identity; the minimal design holds n-1 permutations
    /// in total, one per design row above the trace row.
    std::vector<std::vector<int>> chosen_permutations;
    /// chosen_permutations.size() + 1 rows: the permuted diagonals, then the
    /// all-ones row.
    Eigen::MatrixXd design_matrix;
    /// Distinct diagonal values (ascending, clustered within eig_tol) and
    /// their multiplicities.
    std::vector<double> values;
    std::vector<int> multiplicities;
};

/// Greedy design construction: starting from the trace row and the identity
/// permutation, scans the distinct permuted diagonals in ascending
/// lexicographic order and keeps each row that raises the rank, stopping at
/// rank n. Always succeeds for non-scalar S. Throws std::domain_error when
/// the shifted observable is scalar (zero), std::invalid_argument when it is
/// not diagonal Hermitian.
PermutationDesign design_permutation_experiment(const ComplexMatrix& s,
                                                const Tolerance& tol = {});

struct RankLemmaResult {
    int rank = 0;
    bool full = false;
};

/// Builds all n! permuted rows of the given non-negative values and computes
/// the rank: n whenever the values are not all equal, 1 otherwise. Capped at
/// n <= 7; larger designs must use the constructive greedy scan.
RankLemmaResult verify_rank_lemma(const std::vector<double>& values, const Tolerance& tol = {});

struct ReconstructionResult {
    /// Diagonal of the frame-rotated state in the traceless convention
    /// (entries sum to 0).
    std::vector<double> diagonal;
    double residual = 0.0;
    double condition_estimate = 0.0;
};

/// Simulates the full sequential experiment (frame unitary X1, then the
/// design's permutation chain with Von Neumann back-action after every
/// measurement) and solves the design system for the diagonal of
/// X1 rho0 X1* by least squares. `noise_sigma` optionally perturbs the
/// simulated outputs with seeded Gaussian noise. rho0_true is the simulated
/// ground truth; the reconstruction itself sees only the outputs.
ReconstructionResult run_permutation_tomography(const DensityState& rho0_true,
                                                const ComplexMatrix& x1,
                                                const ControlSystem& sys,
                                                const PermutationDesign& design,
                                                const Tolerance& tol = {},
                                                double noise_sigma = 0.0,
                                                std::uint64_t noise_seed = 0);

struct AncillaResult {
    /// Reconstructed unknown state in physical unit-trace form.
    ComplexMatrix rho1;
    double residual = 0.0;
    double condition_estimate = 0.0;
    /// Rank of the sensitivity map over the n^2 - 1 state parameters.
    int sensitivity_rank = 0;
    bool injective = false;
    /// Parameter-space directions (see the theta order below) the probes
    /// cannot see; empty when injective.
    std::vector<Eigen::VectorXd> unobserved_directions;
};

/// Parameter order used by the ancilla reconstruction: the first n-1 diagonal
/// entries of rho1, then for every pair j < k in row-major order Re rho_jk
/// and Im rho_jk. The matching Hermitian basis matrices (all traceless under
/// the fixed-trace constraint) are returned for test use.
std::vector<ComplexMatrix> state_parameter_basis(int n);

/// Builds probe unitaries X1 whose conjugate columns are s_p (x) e_a: every
/// rho1 parameter gets a probe vector s_p per the e/(e_j+e_k)/(e_j - i e_k)
/// pattern, packed onto ancilla basis slots with nonzero weight in
/// rho2_known's diagonal (vectors sharing a slot must be orthogonal). Opens a
/// new probe when the slots are exhausted. The designated columns come first,
/// completed to a unitary by QR.
std::vector<ComplexMatrix> default_ancilla_probes(int n, const DensityState& rho2_known,
                                                  const Tolerance& tol = {});

/// Full-state reconstruction through an ancilla: simulates one permutation
/// tomography experiment per probe on the joint state rho1 (x) rho2, stacks
/// the recovered joint diagonals into a linear system over rho1's n^2 - 1
/// real parameters, and solves it by SVD least squares. Rank deficiency is
/// reported through `injective` and `unobserved_directions` rather than
/// thrown, so callers can inspect what was missed. `sys` is the joint system
/// whose (shifted) observable must match s_joint.
AncillaResult ancilla_tomography(const DensityState& rho1_unknown,
                                 const DensityState& rho2_known, const ComplexMatrix& s_joint,
                                 const std::vector<ComplexMatrix>& probes,
                                 const ControlSystem& sys, const Tolerance& tol = {});

}  // namespace qobs

#endif  // QOBS_TOMOGRAPHY_HPP
