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

#ifndef QOBS_MATRIX_HPP
#define QOBS_MATRIX_HPP

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace qobs {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, the carrier for states, observables,
/// Hamiltonian generators and all bracket results.
using ComplexMatrix = Eigen::MatrixXcd;

/// Numerical tolerances used throughout the library.
///
/// rank_tol drives subspace membership and rank decisions (relative to the
/// norm of the candidate), eig_tol clusters nearby eigenvalues into a single
/// eigenspace, sim_tol bounds the accuracy of propagators and simulated
/// evolutions.
struct Tolerance {
    double rank_tol = 1e-10;
    double eig_tol = 1e-9;
    double sim_tol = 1e-12;

    /// Throws std::invalid_argument unless all tolerances are > 0.
    void validate() const;
};

/// Frobenius norm, sqrt(sum |a_ij|^2).
double frobenius_norm(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);
bool is_skew_hermitian(const ComplexMatrix& a, double tol);
bool is_unitary(const ComplexMatrix& a, double tol);
bool is_traceless(const ComplexMatrix& a, double tol);

/// Lie bracket [a, b] = ab - ba. Throws on dimension mismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product <a, b> = Tr(a b*), with b* the conjugate
/// transpose. Restricted to skew-Hermitian matrices this is a real inner
/// product. Throws on dimension mismatch.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// m - (Tr(m)/n) I. Idempotent; the subtracted constant Tr(m)/n is what a
/// caller records to recover raw expectation values.
ComplexMatrix traceless_shift(const ComplexMatrix& m);

/// Matrix exponential (scaling-and-squaring with Pade approximation).
/// For skew-Hermitian input the result is unitary.
ComplexMatrix expm(const ComplexMatrix& a);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spin-1/2 operators: the Pauli matrices scaled by 1/2.
ComplexMatrix spin_x();
ComplexMatrix spin_y();
ComplexMatrix spin_z();

namespace detail {
/// Throws std::invalid_argument with `what` unless `cond` holds.
void require(bool cond, const std::string& what);
}  // namespace detail

}  // namespace qobs

#endif  // QOBS_MATRIX_HPP
