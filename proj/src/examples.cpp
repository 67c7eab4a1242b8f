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

#include "qobs/examples.hpp"

#include <stdexcept>

namespace qobs {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix eye(int n) { return ComplexMatrix::Identity(n, n); }

ScriptSegment control_segment(double duration, std::vector<double> controls, bool measure) {
    ScriptSegment seg;
    seg.duration = duration;
    seg.controls = std::move(controls);
    seg.measure_after = measure;
    return seg;
}

Scenario tilted_spin_scenario(const Tolerance& tol) {
    Scenario sc;
    sc.system = tilted_spin_system(tol);

    ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    sc.states.emplace("ground", make_density_state(ground, tol));
    ComplexMatrix tipped(2, 2);
    tipped << 0.75, Complex(0.1, -0.2), Complex(0.1, 0.2), 0.25;
    sc.states.emplace("tipped", make_density_state(tipped, tol));

    ExperimentScript two_pulse;
    two_pulse.segments.push_back(control_segment(1.0, {0.7}, true));
    two_pulse.segments.push_back(control_segment(0.5, {-0.3}, true));
    sc.scripts.emplace("two_pulse", std::move(two_pulse));
    return sc;
}

Scenario ising_scenario(const Tolerance& tol) {
    Scenario sc;
    sc.system = ising_system(tol);

    ComplexMatrix up_up = ComplexMatrix::Zero(4, 4);
    up_up(0, 0) = 1.0;
    sc.states.emplace("up_up", make_density_state(up_up, tol));
    ComplexMatrix mixed = ComplexMatrix::Zero(4, 4);
    mixed.diagonal() << 0.4, 0.3, 0.2, 0.1;
    sc.states.emplace("mixed", make_density_state(mixed, tol));

    ExperimentScript drive;
    drive.segments.push_back(control_segment(0.8, {1.0, 0.5}, true));
    drive.segments.push_back(control_segment(1.2, {0.0, 1.0}, true));
    sc.scripts.emplace("drive", std::move(drive));
    return sc;
}

Scenario three_level_scenario(const Tolerance& tol) {
    Scenario sc;
    sc.system = three_level_system(tol);
    ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
    rho.diagonal() << 0.5, 0.3, 0.2;
    sc.states.emplace("ladder", make_density_state(rho, tol));

    ExperimentScript sweep;
    sweep.segments.push_back(control_segment(0.6, {1.0}, true));
    sweep.segments.push_back(control_segment(0.6, {-1.0}, true));
    sc.scripts.emplace("sweep", std::move(sweep));
    return sc;
}

Scenario so2_scenario(const Tolerance& tol) {
    Scenario sc;
    sc.system = so2_system(tol);
    ComplexMatrix rho(2, 2);
    rho << 0.9, 0.1, 0.1, 0.1;
    sc.states.emplace("tilted", make_density_state(rho, tol));

    // Two rotation-and-measure rounds; the second output explores the
    // two-step reachable disk.
    ExperimentScript two_step;
    two_step.segments.push_back(control_segment(0.4, {1.0}, true));
    two_step.segments.push_back(control_segment(0.9, {1.0}, true));
    sc.scripts.emplace("two_step", std::move(two_step));
    return sc;
}

Scenario three_spin_probe_scenario(const Tolerance& tol) {
    Scenario sc;
    sc.system = three_spin_probe_system(tol);

    const DensityState unknown = qubit_state(0.6, Complex(0.1, -0.2), tol);
    const DensityState ancilla = three_spin_ancilla_state(tol);
    DensityState joint;
    joint.matrix = kron(unknown.matrix, ancilla.matrix);
    joint.convention = StateConvention::trace_one;
    sc.states.emplace("unknown", unknown);
    sc.states.emplace("ancilla", ancilla);
    sc.states.emplace("joint", make_density_state(joint.matrix, tol));

    TomographySetup setup;
    setup.state = "joint";
    setup.unknown_state = "unknown";
    setup.known_state = "ancilla";
    sc.tomography = std::move(setup);
    return sc;
}

}  // namespace

ControlSystem tilted_spin_system(const Tolerance& tol) {
    ComplexMatrix b(2, 2);
    b << 0.0, 1.0, -1.0, 0.0;
    ComplexMatrix s(2, 2);
    s << 1.0, -kI, kI, -1.0;
    return make_control_system({b}, s, tol, "tilted-spin");
}

ControlSystem ising_system(const Tolerance& tol) {
    const ComplexMatrix sx = spin_x(), sz = spin_z(), id = eye(2);
    const ComplexMatrix coupling = kI * kron(sz, sz);
    const ComplexMatrix drive = kI * kron(sx, id);
    const ComplexMatrix s = kron(sz, id) + kron(id, sz);
    return make_control_system({coupling, drive}, s, tol, "ising");
}

ControlSystem three_level_system(const Tolerance& tol) {
    ComplexMatrix b = ComplexMatrix::Zero(3, 3);
    b(0, 0) = kI;
    b(1, 1) = -kI;
    b(0, 2) = 2.0;
    b(2, 0) = -2.0;
    ComplexMatrix s = ComplexMatrix::Zero(3, 3);
    s.diagonal() << 1.0, -3.0, 2.0;
    return make_control_system({b}, s, tol, "three-level");
}

ControlSystem so2_system(const Tolerance& tol) {
    ComplexMatrix b(2, 2);
    b << 0.0, 1.0, -1.0, 0.0;
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s.diagonal() << 1.0, -1.0;
    return make_control_system({b}, s, tol, "so2");
}

ComplexMatrix three_spin_observable() {
    const ComplexMatrix sz = spin_z(), id = eye(2);
    return kron(kron(sz, id), id) + kron(kron(id, sz), id) + kron(kron(id, id), sz);
}

ControlSystem three_spin_probe_system(const Tolerance& tol) {
    const ComplexMatrix sx = spin_x(), id = eye(2);
    const ComplexMatrix drive = kI * kron(kron(sx, id), id);
    return make_control_system({drive}, three_spin_observable(), tol, "three-spin-probe");
}

DensityState three_spin_ancilla_state(const Tolerance& tol) {
    ComplexMatrix half = ComplexMatrix::Zero(2, 2);
    half.diagonal() << 1.0 / 3.0, 2.0 / 3.0;
    return make_density_state(kron(half, half), tol);
}

DensityState qubit_state(double m, Complex l, const Tolerance& tol) {
    ComplexMatrix rho(2, 2);
    rho << m, l, std::conj(l), 1.0 - m;
    return make_density_state(rho, tol);
}

std::vector<std::string> example_names() {
    return {"ising", "so2", "three-level", "three-spin-probe", "tilted-spin"};
}

Scenario example_scenario(const std::string& name) {
    const Tolerance tol;
    if (name == "tilted-spin") return tilted_spin_scenario(tol);
    if (name == "ising") return ising_scenario(tol);
    if (name == "three-level") return three_level_scenario(tol);
    if (name == "so2") return so2_scenario(tol);
    if (name == "three-spin-probe") return three_spin_probe_scenario(tol);
    std::string known;
    for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown example '" + name + "'; available: " + known);
}

}  // namespace qobs
