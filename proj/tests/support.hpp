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

// Test-side helpers and independent oracles. The oracles deliberately avoid
// the library's subspace/closure/projection code paths: ranks come from a
// plain vectorize-and-QR, projections from a direct eigensolve, so agreement
// between library and oracle is meaningful evidence.

#ifndef QOBS_TESTS_SUPPORT_HPP
#define QOBS_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qobs/matrix.hpp"

namespace support {

using qobs::Complex;
using qobs::ComplexMatrix;

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double symm(std::mt19937_64& rng) { return 2.0 * unit(rng) - 1.0; }

inline Complex cgauss(std::mt19937_64& rng) {
    const double u1 = 1.0 - unit(rng);
    const double u2 = unit(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return Complex(r * std::cos(6.283185307179586 * u2), r * std::sin(6.283185307179586 * u2));
}

inline ComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = cgauss(rng);
    return a;
}

// Haar-distributed unitary: QR of a Gaussian matrix with the R-diagonal
// phase correction.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    const ComplexMatrix a = random_matrix(n, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
    const ComplexMatrix a = random_matrix(n, rng);
    return ComplexMatrix((a + a.adjoint()) / 2.0);
}

inline ComplexMatrix random_traceless_hermitian(int n, std::mt19937_64& rng) {
    ComplexMatrix h = random_hermitian(n, rng);
    const Complex sh = h.trace() / static_cast<double>(n);
    h -= sh * ComplexMatrix::Identity(n, n);
    return h;
}

inline ComplexMatrix random_density(int n, std::mt19937_64& rng) {
    const ComplexMatrix a = random_matrix(n, rng);
    ComplexMatrix m = a * a.adjoint();
    m /= m.trace().real();
    return m;
}

inline ComplexMatrix random_skew_traceless(int n, std::mt19937_64& rng) {
    return ComplexMatrix(Complex(0.0, 1.0) * random_traceless_hermitian(n, rng));
}

// Trace-preserving Kraus operator set: vertical blocks of a random isometry.
inline std::vector<ComplexMatrix> random_kraus_ops(int n, int k, std::mt19937_64& rng) {
    ComplexMatrix tall(k * n, n);
    for (int r = 0; r < k * n; ++r)
        for (int c = 0; c < n; ++c) tall(r, c) = cgauss(rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(tall);
    const ComplexMatrix thin_q =
        qr.householderQ() * ComplexMatrix::Identity(k * n, n);
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b) ops.push_back(thin_q.block(b * n, 0, n, n));
    return ops;
}

// Oracle: dimension of the real span of complex matrices, by stacking real
// and imaginary parts into a column per matrix and taking the QR rank.
inline int real_span_rank(const std::vector<ComplexMatrix>& mats, double tol = 1e-10) {
    if (mats.empty()) return 0;
    const Eigen::Index n2 = mats[0].size();
    Eigen::MatrixXd cols(2 * n2, static_cast<Eigen::Index>(mats.size()));
    for (std::size_t j = 0; j < mats.size(); ++j) {
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < n2; ++i) {
            const Complex v = mats[j](i / mats[j].cols(), i % mats[j].cols());
            cols(r++, static_cast<Eigen::Index>(j)) = v.real();
            cols(r++, static_cast<Eigen::Index>(j)) = v.imag();
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(cols);
    qr.setThreshold(tol);
    return static_cast<int>(qr.rank());
}

// Oracle: closure of span(seeds) under bracketing with the given directions,
// grown by rank recomputation from scratch at every candidate.
inline std::vector<ComplexMatrix> bracket_closure_oracle(
    std::vector<ComplexMatrix> elements, const std::vector<ComplexMatrix>& directions,
    double tol = 1e-10) {
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t frozen = elements.size();
        for (std::size_t e = 0; e < frozen; ++e) {
            for (const auto& d : directions) {
                const ComplexMatrix c = d * elements[e] - elements[e] * d;
                const int before = real_span_rank(elements, tol);
                std::vector<ComplexMatrix> extended = elements;
                extended.push_back(c);
                if (real_span_rank(extended, tol) > before) {
                    elements.push_back(c);
                    grew = true;
                }
            }
        }
    }
    return elements;
}

// Oracle: spectral projection map of a Hermitian observable, from a direct
// eigensolve with gap clustering.
inline ComplexMatrix project_oracle(const ComplexMatrix& s, const ComplexMatrix& f,
                                    double eig_tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
    const Eigen::VectorXd w = es.eigenvalues();
    const ComplexMatrix v = es.eigenvectors();
    const int n = static_cast<int>(w.size());
    const double gap = eig_tol * std::max(1.0, std::abs(w(n - 1)));
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || w(i) - w(i - 1) > gap) {
            const ComplexMatrix block = v.middleCols(start, i - start);
            const ComplexMatrix pi = block * block.adjoint();
            out += pi * f * pi;
            start = i;
        }
    }
    return out;
}

// Oracle: the pulled-back observable X1* P(X2* ... P(Xk* S Xk) ... X2) X1,
// with projections taken in the eigenbasis of the measured observable s.
inline ComplexMatrix pullback_oracle(const std::vector<ComplexMatrix>& xs,
                                     const ComplexMatrix& s, double eig_tol = 1e-9) {
    ComplexMatrix a = xs.back().adjoint() * s * xs.back();
    for (std::size_t j = xs.size() - 1; j-- > 0;)
        a = xs[j].adjoint() * project_oracle(s, a, eig_tol) * xs[j];
    return a;
}

// Oracle: n^2 - sum of squared eigenvalue multiplicities.
inline int commutator_formula_oracle(const ComplexMatrix& s, double eig_tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
    const Eigen::VectorXd w = es.eigenvalues();
    const int n = static_cast<int>(w.size());
    const double gap = eig_tol * std::max(1.0, std::abs(w(n - 1)));
    int total = n * n;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || w(i) - w(i - 1) > gap) {
            total -= (i - start) * (i - start);
            start = i;
        }
    }
    return total;
}

// Spanning directions of su(n) in a layout unrelated to the library basis:
// unnormalized pair rotations plus adjacent diagonal differences.
inline std::vector<ComplexMatrix> su_directions_oracle(int n) {
    std::vector<ComplexMatrix> dirs;
    const Complex kI(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            ComplexMatrix a = ComplexMatrix::Zero(n, n);
            a(j, k) = kI;
            a(k, j) = kI;
            dirs.push_back(a);
            ComplexMatrix b = ComplexMatrix::Zero(n, n);
            b(j, k) = 1.0;
            b(k, j) = -1.0;
            dirs.push_back(b);
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        ComplexMatrix d = ComplexMatrix::Zero(n, n);
        d(i, i) = kI;
        d(i + 1, i + 1) = -kI;
        dirs.push_back(d);
    }
    return dirs;
}

// Random traceless Hermitian matrix with a clustered spectrum: eigenvalues
// drawn from `clusters` distinct levels, conjugated by a Haar unitary.
inline ComplexMatrix random_clustered_hermitian(int n, int clusters, std::mt19937_64& rng) {
    std::vector<double> levels(static_cast<std::size_t>(clusters));
    for (auto& v : levels) v = 4.0 * symm(rng);
    // The leading entries walk through every level so each requested
    // cluster is populated and the result is never scalar.
    Eigen::VectorXd diag(n);
    for (int i = 0; i < n; ++i)
        diag(i) = i < clusters
                      ? levels[static_cast<std::size_t>(i)]
                      : levels[static_cast<std::size_t>(rng() %
                                                        static_cast<std::uint64_t>(clusters))];
    diag.array() -= diag.mean();
    const ComplexMatrix u = random_unitary(n, rng);
    return u * diag.cast<Complex>().asDiagonal() * u.adjoint();
}

}  // namespace support

#endif  // QOBS_TESTS_SUPPORT_HPP
