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

#include "qobs/observability.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qobs/gellmann.hpp"

namespace qobs {

namespace {

// Uniform double in [0, 1) from the top 53 bits; avoids the
// implementation-defined std distributions so seeded runs match across
// platforms.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ObservabilityReport analyze(const ControlSystem& sys, int max_k, const Tolerance& tol) {
    tol.validate();
    detail::require(max_k >= 1, "analyze: max_k must be >= 1");
    const ObservabilityChain chain = observability_chain(sys, max_k, nullptr, tol);

    ObservabilityReport rep;
    rep.dim_n = sys.dim_n;
    rep.dim_L = chain.algebra.dim();
    const int full = sys.dim_n * sys.dim_n - 1;
    rep.controllable = rep.dim_L == full;
    rep.saturated = chain.saturated;
    rep.saturation_k = static_cast<int>(chain.spaces.size());
    rep.dims_Vk.reserve(chain.spaces.size());
    rep.observable_k.reserve(chain.spaces.size());
    for (const auto& v : chain.spaces) {
        rep.dims_Vk.push_back(v.dim());
        rep.observable_k.push_back(v.dim() == full);
        rep.observable_overall = rep.observable_overall || v.dim() == full;
    }
    rep.observable_one_step = rep.observable_k.front();

    const OperatorSubspace in_algebra = bracket_span(sys.observable, chain.algebra.basis(), tol);
    const OperatorSubspace in_full = bracket_span(sys.observable, gell_mann_basis(sys.dim_n), tol);
    rep.prop4_dims = {in_algebra.dim(), in_full.dim()};
    rep.first_order_condition = in_algebra.dim() == in_full.dim();
    return rep;
}

IndistinguishabilityVerdict indistinguishable(const ControlSystem& sys,
                                              const ComplexMatrix& rho1,
                                              const ComplexMatrix& rho2, int k,
                                              const Tolerance& tol) {
    tol.validate();
    detail::require(k >= 1, "indistinguishable: k must be >= 1");
    for (const ComplexMatrix* rho : {&rho1, &rho2}) {
        detail::require(rho->rows() == sys.dim_n && rho->cols() == sys.dim_n,
                        "indistinguishable: state/system dimension mismatch");
        const double scale = std::max(1.0, frobenius_norm(*rho));
        detail::require(is_hermitian(*rho, tol.rank_tol * scale),
                        "indistinguishable: states must be Hermitian");
        detail::require(is_traceless(*rho, tol.rank_tol * scale),
                        "indistinguishable: states must be traceless (shift first)");
    }
    const OperatorSubspace vk = generalized_observability_space(sys, k, nullptr, tol);
    const ComplexMatrix delta = rho1 - rho2;
    // For skew-Hermitian F and Hermitian delta, Tr(F delta) is purely
    // imaginary and |Tr(F delta)| = Re<i delta, F>.
    const std::vector<double> coords = vk.coordinates(Complex(0.0, 1.0) * delta);
    IndistinguishabilityVerdict verdict;
    verdict.k_used = k;
    double sq = 0.0;
    for (double c : coords) {
        verdict.max_coordinate = std::max(verdict.max_coordinate, std::abs(c));
        sq += c * c;
    }
    const double scale = std::max(1.0, frobenius_norm(delta));
    verdict.indistinguishable = std::sqrt(sq) <= tol.rank_tol * scale;
    return verdict;
}

FirstOrderVerdict first_order_condition(const ControlSystem& sys, const Tolerance& tol) {
    tol.validate();
    const OperatorSubspace algebra = dynamical_algebra(sys, tol);
    const OperatorSubspace in_algebra = bracket_span(sys.observable, algebra.basis(), tol);
    const OperatorSubspace in_full = bracket_span(sys.observable, gell_mann_basis(sys.dim_n), tol);
    FirstOrderVerdict v;
    v.dim_bracket_algebra = in_algebra.dim();
    v.dim_bracket_full = in_full.dim();
    v.holds = v.dim_bracket_algebra == v.dim_bracket_full;
    return v;
}

StateDecomposition decompose_state(const ComplexMatrix& rho, const OperatorSubspace& vk,
                                   const Tolerance& tol, int k_used) {
    tol.validate();
    detail::require(rho.rows() == vk.ambient_dim() && rho.cols() == vk.ambient_dim(),
                    "decompose_state: state/subspace dimension mismatch");
    const double scale = std::max(1.0, frobenius_norm(rho));
    detail::require(is_hermitian(rho, tol.rank_tol * scale),
                    "decompose_state: state must be Hermitian");
    StateDecomposition dec;
    dec.k_used = k_used;
    const ComplexMatrix proj = vk.project_onto(Complex(0.0, 1.0) * rho);
    dec.rho_par = Complex(0.0, -1.0) * proj;
    dec.rho_perp = rho - dec.rho_par;
    return dec;
}

std::vector<ComplexMatrix> orbit_sample(const ControlSystem& sys, const ComplexMatrix& rho0,
                                        int count, std::uint64_t seed) {
    detail::require(count >= 1, "orbit_sample: count must be >= 1");
    detail::require(rho0.rows() == sys.dim_n && rho0.cols() == sys.dim_n,
                    "orbit_sample: state/system dimension mismatch");
    std::mt19937_64 rng(seed);
    std::vector<ComplexMatrix> samples;
    samples.reserve(static_cast<std::size_t>(count));
    samples.push_back(rho0);
    for (int i = 1; i < count; ++i) {
        const int length = static_cast<int>(rng() % 8) + 1;
        ComplexMatrix x = ComplexMatrix::Identity(sys.dim_n, sys.dim_n);
        for (int w = 0; w < length; ++w) {
            ComplexMatrix a = ComplexMatrix::Zero(sys.dim_n, sys.dim_n);
            for (const auto& b : sys.generators) a += (2.0 * next_unit(rng) - 1.0) * b;
            x = expm(a) * x;
        }
        samples.push_back(x * rho0 * x.adjoint());
    }
    return samples;
}

}  // namespace qobs
