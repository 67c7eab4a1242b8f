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

#include "qobs/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qobs {

ControlSystem make_control_system(const std::vector<ComplexMatrix>& generators,
                                                                    const ComplexMatrix& observable,
                                                                    const Tolerance& tol, std::string label) {
    tol.validate();
    detail::require(!generators.empty(), "control system needs at least one generator");
    detail::require(observable.rows() == observable.cols() && observable.rows() >= 2,
                                    "observable must be square with dimension >= 2");
    const int n = static_cast<int>(observable.rows());

    ControlSystem sys;
    sys.dim_n = n;
    sys.label = std::move(label);
    sys.generators.reserve(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const ComplexMatrix& b = generators[j];
        detail::require(b.rows() == n && b.cols() == n,
                                        "generator " + std::to_string(j) + " dimension mismatch");
        const double scale = std::max(1.0, frobenius_norm(b));
        detail::require(is_skew_hermitian(b, tol.rank_tol * scale),
                                        "generator " + std::to_string(j) + " is not skew-Hermitian");
        sys.generators.push_back(traceless_shift(b));
    }

    const double s_scale = std::max(1.0, frobenius_norm(observable));
    detail::require(is_hermitian(observable, tol.rank_tol * s_scale),
                                    "observable is not Hermitian");
    sys.observable_shift = observable.trace().real() / n;
    sys.observable = traceless_shift(observable);
    return sys;
}

}  // namespace qobs
