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

#include "qobs/lie.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qobs/spectral.hpp"

namespace qobs {

namespace {

void require_nonzero_observable(const ControlSystem& sys, const Tolerance& tol) {
    if (frobenius_norm(sys.observable) <= tol.rank_tol)
        throw std::domain_error(
            "observable is zero after the traceless shift; analysis needs S != 0");
}

// Brackets every not-yet-processed basis element of `space` against every
// direction, extending the basis with the residuals. A rejected bracket lies
// in the span at rejection time and the span only grows, so each pair is
// visited once.
void close_under_brackets(OperatorSubspace& space, const std::vector<ComplexMatrix>& directions,
                          const Tolerance& tol, const char* who) {
    int processed = 0;
    int sweeps = 0;
    while (processed < space.dim() && space.dim() < space.max_dim()) {
        if (++sweeps > space.max_dim() + 1)
            throw std::runtime_error(std::string(who) +
                                     ": bracket closure failed to saturate within dim su(n) "
                                     "sweeps; tolerances are likely inconsistent");
        const int frontier_end = space.dim();
        for (int i = processed; i < frontier_end && space.dim() < space.max_dim(); ++i) {
            const int depth = space.depth_tags()[i] + 1;
            for (const auto& b : directions) {
                orthonormal_extend(space, commutator(space.element(i), b), tol, depth);
                if (space.dim() == space.max_dim()) break;
            }
        }
        processed = frontier_end;
    }
}

ComplexMatrix von_neumann_image(const ComplexMatrix& f, const SpectralDecomposition& spec) {
    ComplexMatrix out = ComplexMatrix::Zero(f.rows(), f.cols());
    for (const auto& p : spec.projectors) out += p * f * p;
    return out;
}

}  // namespace

OperatorSubspace dynamical_algebra(const ControlSystem& sys, const Tolerance& tol) {
    tol.validate();
    detail::require(!sys.generators.empty(), "dynamical_algebra: system has no generators");
    OperatorSubspace alg(sys.dim_n);
    for (const auto& b : sys.generators) orthonormal_extend(alg, b, tol, 0);
    close_under_brackets(alg, sys.generators, tol, "dynamical_algebra");
    return alg;
}

OperatorSubspace stabilize(const std::vector<ComplexMatrix>& seeds,
                           const OperatorSubspace& algebra, const Tolerance& tol) {
    tol.validate();
    detail::require(!seeds.empty(), "stabilize: need at least one seed");
    detail::require(algebra.ambient_dim() >= 2, "stabilize: algebra has no ambient dimension");
    const int n = algebra.ambient_dim();
    OperatorSubspace v(n);
    for (const auto& s : seeds) {
        detail::require(s.rows() == n && s.cols() == n, "stabilize: seed dimension mismatch");
        orthonormal_extend(v, s, tol, 0);
    }
    if (v.dim() == 0) throw std::domain_error("stabilize: all seeds are zero");
    close_under_brackets(v, algebra.basis(), tol, "stabilize");
    return v;
}

OperatorSubspace observability_space(const ControlSystem& sys, const Tolerance& tol) {
    tol.validate();
    require_nonzero_observable(sys, tol);
    const ComplexMatrix is = Complex(0.0, 1.0) * sys.observable;
    return stabilize({is}, dynamical_algebra(sys, tol), tol);
}

ObservabilityChain observability_chain(const ControlSystem& sys, int max_k,
                                       const KrausChannel* channel, const Tolerance& tol) {
    tol.validate();
    detail::require(max_k >= 1, "observability_chain: max_k must be >= 1");
    require_nonzero_observable(sys, tol);
    if (channel) {
        validate_kraus(*channel, tol);
        detail::require(channel->operators.front().rows() == sys.dim_n,
                        "observability_chain: channel/system dimension mismatch");
    }

    ObservabilityChain chain;
    chain.algebra = dynamical_algebra(sys, tol);
    const ComplexMatrix is = Complex(0.0, 1.0) * sys.observable;
    chain.spaces.push_back(stabilize({is}, chain.algebra, tol));

    SpectralDecomposition spec;
    if (!channel) spec = spectral(sys.observable, tol);

    while (static_cast<int>(chain.spaces.size()) < max_k) {
        const OperatorSubspace& prev = chain.spaces.back();
        // su(n) is a fixpoint of the Von Neumann recursion: the projection of
        // iS is iS itself, so monotonicity pins every later space to su(n).
        if (!channel && prev.dim() == prev.max_dim()) break;
        if (prev.dim() == 0) break;

        std::vector<ComplexMatrix> images;
        images.reserve(prev.basis().size());
        bool any_nonzero = false;
        for (const auto& f : prev.basis()) {
            ComplexMatrix img = channel ? traceless_shift(kraus_dual(*channel, f, tol))
                                        : von_neumann_image(f, spec);
            any_nonzero = any_nonzero || frobenius_norm(img) > tol.rank_tol;
            images.push_back(std::move(img));
        }
        OperatorSubspace next =
            any_nonzero ? stabilize(images, chain.algebra, tol) : OperatorSubspace(sys.dim_n);

        bool fixpoint = next.dim() == prev.dim();
        if (fixpoint) {
            for (const auto& f : prev.basis()) {
                if (!next.contains(f, tol.rank_tol)) {
                    fixpoint = false;
                    break;
                }
            }
        }
        if (fixpoint) {
            chain.saturated = true;
            break;
        }
        chain.spaces.push_back(std::move(next));
    }
    if (!channel && chain.spaces.back().dim() == chain.spaces.back().max_dim())
        chain.saturated = true;
    if (chain.spaces.back().dim() == 0) chain.saturated = true;
    return chain;
}

OperatorSubspace generalized_observability_space(const ControlSystem& sys, int k,
                                                 const KrausChannel* channel,
                                                 const Tolerance& tol) {
    tol.validate();
    detail::require(k >= 0, "generalized_observability_space: k must be >= 0");
    if (k == 0) {
        require_nonzero_observable(sys, tol);
        OperatorSubspace v0(sys.dim_n);
        orthonormal_extend(v0, Complex(0.0, 1.0) * sys.observable, tol, 0);
        return v0;
    }
    return observability_chain(sys, k, channel, tol).spaces.back();
}

int commutator_dimension(const ComplexMatrix& s, const Tolerance& tol) {
    tol.validate();
    detail::require(s.rows() == s.cols() && s.rows() >= 2,
                    "commutator_dimension: matrix must be square with dimension >= 2");
    const double scale = std::max(1.0, frobenius_norm(s));
    detail::require(is_hermitian(s, tol.rank_tol * scale),
                    "commutator_dimension: matrix is not Hermitian");
    const ComplexMatrix shifted = traceless_shift(s);
    if (frobenius_norm(shifted) <= tol.rank_tol * scale)
        throw std::domain_error("commutator_dimension: matrix is scalar, the bracket map is 0");
    const int n = static_cast<int>(s.rows());
    const SpectralDecomposition spec = spectral(shifted, tol);
    int sum_sq = 0;
    for (int m : spec.multiplicities) sum_sq += m * m;
    return n * n - sum_sq;
}

OperatorSubspace bracket_span(const ComplexMatrix& s,
                              const std::vector<ComplexMatrix>& directions,
                              const Tolerance& tol) {
    tol.validate();
    detail::require(s.rows() == s.cols() && s.rows() >= 2,
                    "bracket_span: matrix must be square with dimension >= 2");
    const double scale = std::max(1.0, frobenius_norm(s));
    detail::require(is_hermitian(s, tol.rank_tol * scale), "bracket_span: matrix is not Hermitian");
    const ComplexMatrix is = Complex(0.0, 1.0) * s;
    OperatorSubspace v(static_cast<int>(s.rows()));
    for (const auto& e : directions) {
        detail::require(e.rows() == s.rows() && e.cols() == s.cols(),
                        "bracket_span: direction dimension mismatch");
        orthonormal_extend(v, commutator(is, e), tol, 1);
    }
    return v;
}

}  // namespace qobs
