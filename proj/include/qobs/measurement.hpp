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

#ifndef QOBS_MEASUREMENT_HPP
#define QOBS_MEASUREMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qobs/matrix.hpp"
#include "qobs/spectral.hpp"
#include "qobs/system.hpp"

namespace qobs {

enum class StateConvention { trace_one, traceless_shifted };

/// A density matrix in one of two equivalent representations: the physical
/// unit-trace form, or the traceless form obtained by subtracting (Tr/n) I.
/// shift_record keeps the subtracted constant so the physical matrix is
/// always recoverable.
struct DensityState {
    ComplexMatrix matrix;
    StateConvention convention = StateConvention::trace_one;
    double shift_record = 0.0;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Physical trace represented by the state: Tr(matrix) in trace_one form,
/// n * shift_record in traceless form.
double physical_trace(const DensityState& s);

/// The unit-trace-form matrix, reconstructed if the state is shifted.
ComplexMatrix physical_matrix(const DensityState& s);

/// Wraps a raw density matrix, checking Hermiticity, unit trace, and
/// positivity (eigenvalues >= -eig_tol).
DensityState make_density_state(const ComplexMatrix& rho, const Tolerance& tol = {});

/// Checks the convention invariants of an already-built state: Hermitian,
/// trace matching the convention, positivity in trace_one form.
void validate_density_state(const DensityState& s, const Tolerance& tol = {});

/// Exact convention conversions (inverse of each other).
DensityState to_traceless(const DensityState& s);
DensityState to_physical(const DensityState& s);

/// Completely positive trace-preserving map F(rho) = sum_k W_k rho W_k*.
/// Operators may carry outcome labels (several operators can share one);
/// labels do not affect the non-selective update.
struct KrausChannel {
    std::vector<ComplexMatrix> operators;
    std::vector<std::string> labels;
};

/// Checks sum_k W_k* W_k = I within rank_tol and label arity.
void validate_kraus(const KrausChannel& ch, const Tolerance& tol = {});

/// Non-selective state update F(rho). Applied to the physical matrix; a
/// shifted input is reconstructed first and re-shifted after, since F need
/// not fix the identity.
DensityState kraus_apply(const KrausChannel& ch, const DensityState& rho,
                         const Tolerance& tol = {});

/// Heisenberg-picture dual F*(S) = sum_k W_k* S W_k, satisfying
/// Tr(F*(S) rho) = Tr(S F(rho)).
ComplexMatrix kraus_dual(const KrausChannel& ch, const ComplexMatrix& s,
                         const Tolerance& tol = {});

/// One evolution step of an experiment: either a controlled segment (positive
/// duration, one control value per generator, split into `substeps` equal
/// constant pieces) or an explicit unitary. `measure_after` inserts a
/// measurement event at the end of the segment.
struct ScriptSegment {
    double duration = 0.0;
    std::vector<double> controls;
    int substeps = 1;
    bool has_unitary = false;
    ComplexMatrix unitary;
    bool measure_after = false;
};

struct ExperimentScript {
    std::vector<ScriptSegment> segments;
    /// Optional per-measurement observables (raw Hermitian, shifted at use).
    /// Empty means the system observable for every measurement; otherwise the
    /// size must equal the number of measurements.
    std::vector<ComplexMatrix> observables;
    /// Optional Kraus back-action replacing the Von Neumann projection at
    /// every measurement event.
    std::optional<KrausChannel> channel;

    int num_measurements() const;
};

/// Throws std::invalid_argument naming the offending segment when durations,
/// control arities, unitaries, observables, or the measurement count are
/// invalid.
void validate_script(const ExperimentScript& script, const ControlSystem& sys,
                     const Tolerance& tol = {});

struct MeasurementRecord {
    std::vector<double> outputs;
    std::vector<DensityState> post_states;
    std::string script_hash;
};

/// Unitary evolution for `duration` under constant controls: conjugates the
/// state by expm(-duration * sum_j u_j B_j), the propagator of
/// dX/dt = -iH X with iH = sum_j u_j B_j. Convention-preserving, since
/// conjugation commutes with the identity shift.
DensityState evolve(const DensityState& rho, const ControlSystem& sys, double duration,
                    const std::vector<double>& controls);

/// Non-selective Von Neumann back-action P(rho) = sum_j Pi_j rho Pi_j over the
/// eigenspace projectors of the measured observable. Idempotent and trace
/// preserving; convention-preserving, since P fixes the identity.
DensityState project(const DensityState& rho, const SpectralDecomposition& s_spec);

/// Runs the script: alternates evolution (controlled or explicit unitary) with
/// measurement events. Each event records the expectation y = Tr(S rho) and
/// replaces rho by P(rho), or by F(rho) for a Kraus script. Outputs are
/// reported in the input state's convention; the two conventions differ by
/// the constant observable_shift * physical_trace.
MeasurementRecord run_experiment(const DensityState& rho0, const ControlSystem& sys,
                                 const ExperimentScript& script, const Tolerance& tol = {});

}  // namespace qobs

#endif  // QOBS_MEASUREMENT_HPP
