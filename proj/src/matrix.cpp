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

#include "qobs/matrix.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace qobs {

namespace detail {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace detail

void Tolerance::validate() const {
    detail::require(rank_tol > 0.0 && eig_tol > 0.0 && sim_tol > 0.0,
                    "Tolerance: all tolerances must be strictly positive");
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_skew_hermitian(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
    return (a.adjoint() * a - id).cwiseAbs().maxCoeff() <= tol;
}

bool is_traceless(const ComplexMatrix& a, double tol) {
    return a.rows() == a.cols() && std::abs(a.trace()) <= tol;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    detail::require(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows(),
                    "commutator: dimension mismatch");
    return a * b - b * a;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    detail::require(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows(),
                    "hs_inner: dimension mismatch");
    // Tr(a b*) == sum_jk a_jk conj(b_jk)
    return (a.array() * b.array().conjugate()).sum();
}

ComplexMatrix traceless_shift(const ComplexMatrix& m) {
    detail::require(m.rows() == m.cols(), "traceless_shift: matrix must be square");
    const Complex shift = m.trace() / static_cast<double>(m.rows());
    return m - shift * ComplexMatrix::Identity(m.rows(), m.cols());
}

ComplexMatrix expm(const ComplexMatrix& a) {
    detail::require(a.rows() == a.cols(), "expm: matrix must be square");
    return a.exp();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix spin_x() {
    ComplexMatrix s(2, 2);
    s << 0.0, 0.5, 0.5, 0.0;
    return s;
}

ComplexMatrix spin_y() {
    ComplexMatrix s(2, 2);
    s << Complex(0, 0), Complex(0, -0.5), Complex(0, 0.5), Complex(0, 0);
    return s;
}

ComplexMatrix spin_z() {
    ComplexMatrix s(2, 2);
    s << 0.5, 0.0, 0.0, -0.5;
    return s;
}

}  // namespace qobs
