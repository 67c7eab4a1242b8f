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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qobs/examples.hpp"
#include "qobs/gellmann.hpp"
#include "qobs/lie.hpp"
#include "qobs/matrix.hpp"
#include "qobs/measurement.hpp"
#include "qobs/observability.hpp"
#include "qobs/subspace.hpp"
#include "qobs/system.hpp"
#include "qobs/tomography.hpp"

namespace py = pybind11;
using namespace qobs;

PYBIND11_MODULE(_qobs, m) {
    m.doc() = "Observability analysis and measurement simulation for bilinear "
              "quantum control systems";

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init<>())
        .def_readwrite("rank_tol", &Tolerance::rank_tol)
        .def_readwrite("eig_tol", &Tolerance::eig_tol)
        .def_readwrite("sim_tol", &Tolerance::sim_tol);

    py::class_<ControlSystem>(m, "ControlSystem")
        .def_readonly("dim_n", &ControlSystem::dim_n)
        .def_readonly("generators", &ControlSystem::generators)
        .def_readonly("observable", &ControlSystem::observable)
        .def_readonly("observable_shift", &ControlSystem::observable_shift)
        .def_readonly("label", &ControlSystem::label);

    m.def("make_control_system", &make_control_system, py::arg("generators"),
          py::arg("observable"), py::arg("tol") = Tolerance{}, py::arg("label") = "");

    py::class_<OperatorSubspace>(m, "OperatorSubspace")
        .def_property_readonly("dim", &OperatorSubspace::dim)
        .def_property_readonly("ambient_dim", &OperatorSubspace::ambient_dim)
        .def_property_readonly("max_dim", &OperatorSubspace::max_dim)
        .def("basis", &OperatorSubspace::basis)
        .def("element", &OperatorSubspace::element, py::arg("index"))
        .def("coordinates", &OperatorSubspace::coordinates, py::arg("matrix"))
        .def("residual_norm", &OperatorSubspace::residual_norm, py::arg("matrix"))
        .def("contains", &OperatorSubspace::contains, py::arg("matrix"),
             py::arg("rank_tol") = Tolerance{}.rank_tol);

    m.def("dynamical_algebra", &dynamical_algebra, py::arg("system"),
          py::arg("tol") = Tolerance{});
    m.def("observability_space", &observability_space, py::arg("system"),
          py::arg("tol") = Tolerance{});
    m.def("generalized_observability_space",
          [](const ControlSystem& sys, int k, const KrausChannel* ch, const Tolerance& tol) {
              return generalized_observability_space(sys, k, ch, tol);
          },
          py::arg("system"), py::arg("k"), py::arg("channel") = nullptr,
          py::arg("tol") = Tolerance{});

    py::class_<ObservabilityReport>(m, "ObservabilityReport")
        .def_readonly("dim_n", &ObservabilityReport::dim_n)
        .def_readonly("dim_L", &ObservabilityReport::dim_L)
        .def_readonly("dims_Vk", &ObservabilityReport::dims_Vk)
        .def_readonly("saturation_k", &ObservabilityReport::saturation_k)
        .def_readonly("saturated", &ObservabilityReport::saturated)
        .def_readonly("controllable", &ObservabilityReport::controllable)
        .def_readonly("observable_one_step", &ObservabilityReport::observable_one_step)
        .def_readonly("observable_k", &ObservabilityReport::observable_k)
        .def_readonly("observable_overall", &ObservabilityReport::observable_overall)
        .def_readonly("first_order_condition", &ObservabilityReport::first_order_condition)
        .def_readonly("bracket_dims", &ObservabilityReport::prop4_dims);

    m.def("analyze", &analyze, py::arg("system"), py::arg("max_k"),
          py::arg("tol") = Tolerance{});

    py::class_<IndistinguishabilityVerdict>(m, "IndistinguishabilityVerdict")
        .def_readonly("indistinguishable", &IndistinguishabilityVerdict::indistinguishable)
        .def_readonly("k_used", &IndistinguishabilityVerdict::k_used)
        .def_readonly("max_coordinate", &IndistinguishabilityVerdict::max_coordinate);

    m.def("indistinguishable", &indistinguishable, py::arg("system"), py::arg("rho1"),
          py::arg("rho2"), py::arg("k"), py::arg("tol") = Tolerance{});

    py::enum_<StateConvention>(m, "StateConvention")
        .value("trace_one", StateConvention::trace_one)
        .value("traceless_shifted", StateConvention::traceless_shifted);

    py::class_<DensityState>(m, "DensityState")
        .def_readonly("matrix", &DensityState::matrix)
        .def_readonly("convention", &DensityState::convention)
        .def_readonly("shift_record", &DensityState::shift_record)
        .def_property_readonly("dim", &DensityState::dim);

    m.def("make_density_state", &make_density_state, py::arg("rho"),
          py::arg("tol") = Tolerance{});
    m.def("to_traceless", &to_traceless, py::arg("state"));
    m.def("to_physical", &to_physical, py::arg("state"));
    m.def("evolve", &evolve, py::arg("state"), py::arg("system"), py::arg("duration"),
          py::arg("controls"));

    py::class_<KrausChannel>(m, "KrausChannel")
        .def(py::init([](std::vector<ComplexMatrix> ops, std::vector<std::string> labels) {
                 KrausChannel ch{std::move(ops), std::move(labels)};
                 validate_kraus(ch);
                 return ch;
             }),
             py::arg("operators"), py::arg("labels") = std::vector<std::string>{})
        .def_readonly("operators", &KrausChannel::operators)
        .def_readonly("labels", &KrausChannel::labels);

    m.def("kraus_apply", &kraus_apply, py::arg("channel"), py::arg("state"),
          py::arg("tol") = Tolerance{});
    m.def("kraus_dual", &kraus_dual, py::arg("channel"), py::arg("observable"),
          py::arg("tol") = Tolerance{});

    py::class_<ScriptSegment>(m, "ScriptSegment")
        .def(py::init([](double duration, std::vector<double> controls, int substeps,
                         bool measure_after) {
                 ScriptSegment seg;
                 seg.duration = duration;
                 seg.controls = std::move(controls);
                 seg.substeps = substeps;
                 seg.measure_after = measure_after;
                 return seg;
             }),
             py::arg("duration"), py::arg("controls"), py::arg("substeps") = 1,
             py::arg("measure_after") = false)
        .def_static(
            "from_unitary",
            [](const ComplexMatrix& u, bool measure_after) {
                ScriptSegment seg;
                seg.has_unitary = true;
                seg.unitary = u;
                seg.measure_after = measure_after;
                return seg;
            },
            py::arg("unitary"), py::arg("measure_after") = false);

    py::class_<ExperimentScript>(m, "ExperimentScript")
        .def(py::init([](std::vector<ScriptSegment> segments,
                         std::vector<ComplexMatrix> observables,
                         std::optional<KrausChannel> channel) {
                 ExperimentScript s;
                 s.segments = std::move(segments);
                 s.observables = std::move(observables);
                 s.channel = std::move(channel);
                 return s;
             }),
             py::arg("segments"), py::arg("observables") = std::vector<ComplexMatrix>{},
             py::arg("channel") = std::nullopt)
        .def_property_readonly("num_measurements", &ExperimentScript::num_measurements);

    py::class_<MeasurementRecord>(m, "MeasurementRecord")
        .def_readonly("outputs", &MeasurementRecord::outputs)
        .def_readonly("post_states", &MeasurementRecord::post_states)
        .def_readonly("script_hash", &MeasurementRecord::script_hash);

    m.def("run_experiment", &run_experiment, py::arg("state"), py::arg("system"),
          py::arg("script"), py::arg("tol") = Tolerance{});

    py::class_<PermutationDesign>(m, "PermutationDesign")
        .def_readonly("base_observable", &PermutationDesign::base_observable)
        .def_readonly("chosen_permutations", &PermutationDesign::chosen_permutations)
        .def_readonly("design_matrix", &PermutationDesign::design_matrix)
        .def_readonly("values", &PermutationDesign::values)
        .def_readonly("multiplicities", &PermutationDesign::multiplicities);

    m.def("design_permutation_experiment", &design_permutation_experiment,
          py::arg("observable"), py::arg("tol") = Tolerance{});
    m.def("cycle_notation", &cycle_notation, py::arg("permutation"));
    m.def("permutation_unitary", &permutation_unitary, py::arg("permutation"));
    m.def(
        "verify_rank_lemma",
        [](const std::vector<double>& values, const Tolerance& tol) {
            const RankLemmaResult r = verify_rank_lemma(values, tol);
            return py::make_tuple(r.rank, r.full);
        },
        py::arg("values"), py::arg("tol") = Tolerance{});

    py::class_<ReconstructionResult>(m, "ReconstructionResult")
        .def_readonly("diagonal", &ReconstructionResult::diagonal)
        .def_readonly("residual", &ReconstructionResult::residual)
        .def_readonly("condition_estimate", &ReconstructionResult::condition_estimate);

    m.def("run_permutation_tomography", &run_permutation_tomography, py::arg("state"),
          py::arg("frame"), py::arg("system"), py::arg("design"), py::arg("tol") = Tolerance{},
          py::arg("noise_sigma") = 0.0, py::arg("noise_seed") = 0);

    py::class_<AncillaResult>(m, "AncillaResult")
        .def_readonly("rho1", &AncillaResult::rho1)
        .def_readonly("residual", &AncillaResult::residual)
        .def_readonly("condition_estimate", &AncillaResult::condition_estimate)
        .def_readonly("sensitivity_rank", &AncillaResult::sensitivity_rank)
        .def_readonly("injective", &AncillaResult::injective)
        .def_readonly("unobserved_directions", &AncillaResult::unobserved_directions);

    m.def("state_parameter_basis", &state_parameter_basis, py::arg("n"));
    m.def("default_ancilla_probes", &default_ancilla_probes, py::arg("n"),
          py::arg("known_state"), py::arg("tol") = Tolerance{});
    m.def("ancilla_tomography", &ancilla_tomography, py::arg("unknown_state"),
          py::arg("known_state"), py::arg("joint_observable"), py::arg("probes"),
          py::arg("system"), py::arg("tol") = Tolerance{});

    m.def("gell_mann_basis", &gell_mann_basis, py::arg("n"));
    m.def("spin_x", &spin_x);
    m.def("spin_y", &spin_y);
    m.def("spin_z", &spin_z);

    m.def("tilted_spin_system", &tilted_spin_system, py::arg("tol") = Tolerance{});
    m.def("ising_system", &ising_system, py::arg("tol") = Tolerance{});
    m.def("three_level_system", &three_level_system, py::arg("tol") = Tolerance{});
    m.def("so2_system", &so2_system, py::arg("tol") = Tolerance{});
    m.def("three_spin_probe_system", &three_spin_probe_system, py::arg("tol") = Tolerance{});
    m.def("three_spin_observable", &three_spin_observable);
    m.def("three_spin_ancilla_state", &three_spin_ancilla_state, py::arg("tol") = Tolerance{});
    m.def("qubit_state", &qubit_state, py::arg("m"), py::arg("l"), py::arg("tol") = Tolerance{});
}
