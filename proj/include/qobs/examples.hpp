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

#ifndef QOBS_EXAMPLES_HPP
#define QOBS_EXAMPLES_HPP

#include <string>
#include <vector>

#include "qobs/scenario.hpp"

namespace qobs {

/// Names of the built-in example scenarios, sorted.
std::vector<std::string> example_names();

/// Builds a built-in scenario by name; throws std::invalid_argument for an
/// unknown name (the message lists the valid names).
Scenario example_scenario(const std::string& name);

/// Single qubit driven by one planar rotation, observed along a tilted axis:
/// B = [[0,1],[-1,0]], S = [[1,-i],[i,-1]]. One-step observable but not
/// controllable (dim L = 1).
ControlSystem tilted_spin_system(const Tolerance& tol = {});

/// Two spins with Ising coupling and a transverse drive on the first spin,
/// observed through total z magnetization. Generators i(sz x sz), i(sx x 1);
/// S = sz x 1 + 1 x sz with half-Pauli normalization. Not observable.
ControlSystem ising_system(const Tolerance& tol = {});

/// Three-level system with one generator whose observability chain grows
/// strictly from V_1 to V_2: S = diag(1,-3,2),
/// B = [[i,0,2],[0,-i,0],[-2,0,0]].
ControlSystem three_level_system(const Tolerance& tol = {});

/// Planar rotations e^L = SO(2) with S = diag(1,-1); the sampled two-step
/// output operators fill the disk a^2 + b^2 <= 1 in [[a,b],[b,-a]] form.
ControlSystem so2_system(const Tolerance& tol = {});

/// One unknown spin coupled to a known two-spin ancilla, observed through
/// total z magnetization of all three spins (dimension 8).
ControlSystem three_spin_probe_system(const Tolerance& tol = {});

/// The diagonal total-magnetization observable of the three-spin system.
ComplexMatrix three_spin_observable();

/// The known two-spin ancilla state diag(1/3,2/3) x diag(1/3,2/3).
DensityState three_spin_ancilla_state(const Tolerance& tol = {});

/// Qubit state [[m, l],[conj(l), 1-m]]; throws when not positive
/// semidefinite within tol.
DensityState qubit_state(double m, Complex l, const Tolerance& tol = {});

}  // namespace qobs

#endif  // QOBS_EXAMPLES_HPP
