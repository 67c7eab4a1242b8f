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

#include "qobs/measurement.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qobs {

namespace {

void fnv_append(std::uint64_t& h, const char* data, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 1099511628211ULL;
    }
}

void fnv_append_double(std::uint64_t& h, double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g,", v);
    fnv_append(h, buf, static_cast<std::size_t>(len));
}

void fnv_append_matrix(std::uint64_t& h, const ComplexMatrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            fnv_append_double(h, m(r, c).real());
            fnv_append_double(h, m(r, c).imag());
        }
    }
}

// FNV-1a over a canonical rendering of the script; stable across runs and
// platforms for bit-identical inputs.
std::string hash_script(const ExperimentScript& script) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& seg : script.segments) {
        if (seg.has_unitary) {
            fnv_append(h, "U:", 2);
            fnv_append_matrix(h, seg.unitary);
        } else {
            fnv_append(h, "C:", 2);
            fnv_append_double(h, seg.duration);
            fnv_append_double(h, static_cast<double>(seg.substeps));
            for (double u : seg.controls) fnv_append_double(h, u);
        }
        fnv_append(h, seg.measure_after ? "M;" : ";", seg.measure_after ? 2 : 1);
    }
    for (const auto& s : script.observables) {
        fnv_append(h, "S:", 2);
        fnv_append_matrix(h, s);
    }
    if (script.channel) {
        for (const auto& w : script.channel->operators) {
            fnv_append(h, "K:", 2);
            fnv_append_matrix(h, w);
        }
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return std::string(out);
}

ComplexMatrix back_action(const ComplexMatrix& rho, const SpectralDecomposition& spec) {
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto& p : spec.projectors) out += p * rho * p;
    return out;
}

}  // namespace

double physical_trace(const DensityState& s) {
    if (s.convention == StateConvention::trace_one) return s.matrix.trace().real();
    return s.shift_record * s.dim();
}

ComplexMatrix physical_matrix(const DensityState& s) {
    if (s.convention == StateConvention::trace_one) return s.matrix;
    return s.matrix + s.shift_record * ComplexMatrix::Identity(s.dim(), s.dim());
}

DensityState make_density_state(const ComplexMatrix& rho, const Tolerance& tol) {
    DensityState s;
    s.matrix = rho;
    s.convention = StateConvention::trace_one;
    s.shift_record = 0.0;
    validate_density_state(s, tol);
    return s;
}

void validate_density_state(const DensityState& s, const Tolerance& tol) {
    tol.validate();
    detail::require(s.matrix.rows() == s.matrix.cols() && s.matrix.rows() >= 2,
                    "density state: matrix must be square with dimension >= 2");
    const double scale = std::max(1.0, frobenius_norm(s.matrix));
    detail::require(is_hermitian(s.matrix, tol.rank_tol * scale),
                    "density state: matrix is not Hermitian");
    if (s.convention == StateConvention::trace_one) {
        detail::require(std::abs(s.matrix.trace().real() - 1.0) <= tol.rank_tol * scale,
                        "density state: trace must be 1 in trace_one convention");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.matrix, Eigen::EigenvaluesOnly);
        detail::require(es.info() == Eigen::Success && es.eigenvalues().minCoeff() >= -tol.eig_tol,
                        "density state: matrix is not positive semidefinite");
    } else {
        detail::require(std::abs(s.matrix.trace()) <= tol.rank_tol * scale,
                        "density state: trace must be 0 in traceless_shifted convention");
    }
}

DensityState to_traceless(const DensityState& s) {
    if (s.convention == StateConvention::traceless_shifted) return s;
    DensityState out;
    out.shift_record = s.matrix.trace().real() / s.dim();
    out.matrix = s.matrix - out.shift_record * ComplexMatrix::Identity(s.dim(), s.dim());
    out.convention = StateConvention::traceless_shifted;
    return out;
}

DensityState to_physical(const DensityState& s) {
    if (s.convention == StateConvention::trace_one) return s;
    DensityState out;
    out.matrix = physical_matrix(s);
    out.convention = StateConvention::trace_one;
    out.shift_record = 0.0;
    return out;
}

void validate_kraus(const KrausChannel& ch, const Tolerance& tol) {
    tol.validate();
    detail::require(!ch.operators.empty(), "kraus channel: needs at least one operator");
    const Eigen::Index n = ch.operators.front().rows();
    detail::require(n >= 2, "kraus channel: dimension must be >= 2");
    for (std::size_t k = 0; k < ch.operators.size(); ++k) {
        detail::require(ch.operators[k].rows() == n && ch.operators[k].cols() == n,
                        "kraus channel: operator " + std::to_string(k) + " dimension mismatch");
    }
    detail::require(ch.labels.empty() || ch.labels.size() == ch.operators.size(),
                    "kraus channel: labels must be absent or one per operator");
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (const auto& w : ch.operators) sum += w.adjoint() * w;
    const double scale = std::max(1.0, sum.cwiseAbs().maxCoeff());
    detail::require((sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <=
                        tol.rank_tol * scale,
                    "kraus channel: sum of W*W must equal the identity (trace preservation)");
}

DensityState kraus_apply(const KrausChannel& ch, const DensityState& rho, const Tolerance& tol) {
    validate_kraus(ch, tol);
    detail::require(ch.operators.front().rows() == rho.dim(),
                    "kraus_apply: channel/state dimension mismatch");
    const ComplexMatrix phys = physical_matrix(rho);
    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const auto& w : ch.operators) out += w * phys * w.adjoint();
    DensityState result = rho;
    if (rho.convention == StateConvention::traceless_shifted)
        out -= rho.shift_record * ComplexMatrix::Identity(rho.dim(), rho.dim());
    result.matrix = out;
    return result;
}

ComplexMatrix kraus_dual(const KrausChannel& ch, const ComplexMatrix& s, const Tolerance& tol) {
    validate_kraus(ch, tol);
    detail::require(s.rows() == s.cols() && s.rows() == ch.operators.front().rows(),
                    "kraus_dual: channel/observable dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(s.rows(), s.cols());
    for (const auto& w : ch.operators) out += w.adjoint() * s * w;
    return out;
}

int ExperimentScript::num_measurements() const {
    int count = 0;
    for (const auto& seg : segments)
        if (seg.measure_after) ++count;
    return count;
}

void validate_script(const ExperimentScript& script, const ControlSystem& sys,
                     const Tolerance& tol) {
    tol.validate();
    const int n = sys.dim_n;
    detail::require(!script.segments.empty(), "script: needs at least one segment");
    for (std::size_t i = 0; i < script.segments.size(); ++i) {
        const auto& seg = script.segments[i];
        const std::string where = "script.segments[" + std::to_string(i) + "]";
        if (seg.has_unitary) {
            detail::require(seg.duration == 0.0 && seg.controls.empty(),
                            where + ": explicit unitary excludes duration/controls");
            detail::require(seg.unitary.rows() == n && seg.unitary.cols() == n,
                            where + ".unitary: dimension mismatch");
            detail::require(is_unitary(seg.unitary, tol.rank_tol),
                            where + ".unitary: matrix is not unitary");
        } else {
            detail::require(std::isfinite(seg.duration) && seg.duration > 0.0,
                            where + ".duration: must be positive");
            detail::require(seg.controls.size() == sys.generators.size(),
                            where + ".controls: need one value per generator");
            for (double u : seg.controls)
                detail::require(std::isfinite(u), where + ".controls: values must be finite");
            detail::require(seg.substeps >= 1, where + ".substeps: must be >= 1");
        }
    }
    const int n_meas = script.num_measurements();
    detail::require(n_meas >= 1, "script: needs at least one measurement");
    if (!script.observables.empty()) {
        detail::require(static_cast<int>(script.observables.size()) == n_meas,
                        "script.observables: need one entry per measurement");
        for (std::size_t j = 0; j < script.observables.size(); ++j) {
            const auto& s = script.observables[j];
            const std::string where = "script.observables[" + std::to_string(j) + "]";
            detail::require(s.rows() == n && s.cols() == n, where + ": dimension mismatch");
            const double scale = std::max(1.0, frobenius_norm(s));
            detail::require(is_hermitian(s, tol.rank_tol * scale), where + ": not Hermitian");
        }
    }
    if (script.channel) {
        validate_kraus(*script.channel, tol);
        detail::require(script.channel->operators.front().rows() == n,
                        "script.channel: dimension mismatch");
    }
}

DensityState evolve(const DensityState& rho, const ControlSystem& sys, double duration,
                    const std::vector<double>& controls) {
    detail::require(rho.dim() == sys.dim_n, "evolve: state/system dimension mismatch");
    detail::require(duration > 0.0, "evolve: duration must be positive");
    detail::require(controls.size() == sys.generators.size(),
                    "evolve: need one control value per generator");
    ComplexMatrix a = ComplexMatrix::Zero(sys.dim_n, sys.dim_n);
    for (std::size_t j = 0; j < controls.size(); ++j) a += controls[j] * sys.generators[j];
    // X solves dX/dt = -iH X with sum_j u_j B_j = iH, so X = expm(-t sum u B).
    const ComplexMatrix x = expm(-duration * a);
    DensityState out = rho;
    out.matrix = x * rho.matrix * x.adjoint();
    return out;
}

DensityState project(const DensityState& rho, const SpectralDecomposition& s_spec) {
    detail::require(rho.dim() == s_spec.dim(), "project: state/observable dimension mismatch");
    DensityState out = rho;
    out.matrix = back_action(rho.matrix, s_spec);
    return out;
}

MeasurementRecord run_experiment(const DensityState& rho0, const ControlSystem& sys,
                                 const ExperimentScript& script, const Tolerance& tol) {
    detail::require(rho0.dim() == sys.dim_n, "run_experiment: state/system dimension mismatch");
    validate_script(script, sys, tol);

    const int n = sys.dim_n;
    const int n_meas = script.num_measurements();
    const bool shifted = rho0.convention == StateConvention::traceless_shifted;
    const double t_phys = physical_trace(rho0);

    // Per-measurement traceless observable, its removed constant, and (for
    // Von Neumann back-action) its eigenspace projectors.
    std::vector<ComplexMatrix> s_tl(static_cast<std::size_t>(n_meas));
    std::vector<double> s_shift(static_cast<std::size_t>(n_meas));
    std::vector<SpectralDecomposition> s_spec;
    if (!script.channel) s_spec.resize(static_cast<std::size_t>(n_meas));
    for (int j = 0; j < n_meas; ++j) {
        if (script.observables.empty()) {
            s_tl[j] = sys.observable;
            s_shift[j] = sys.observable_shift;
        } else {
            s_tl[j] = traceless_shift(script.observables[j]);
            s_shift[j] = script.observables[j].trace().real() / n;
        }
        if (!script.channel) s_spec[j] = spectral(s_tl[j], tol);
    }

    // Simulate on the physical matrix; the Kraus update need not fix the
    // identity, so the shifted representation cannot be propagated directly.
    ComplexMatrix rho = physical_matrix(rho0);
    MeasurementRecord rec;
    rec.script_hash = hash_script(script);
    rec.outputs.reserve(static_cast<std::size_t>(n_meas));
    rec.post_states.reserve(static_cast<std::size_t>(n_meas));

    int meas = 0;
    for (const auto& seg : script.segments) {
        if (seg.has_unitary) {
            rho = seg.unitary * rho * seg.unitary.adjoint();
        } else {
            ComplexMatrix a = ComplexMatrix::Zero(n, n);
            for (std::size_t j = 0; j < seg.controls.size(); ++j)
                a += seg.controls[j] * sys.generators[j];
            const ComplexMatrix x = expm(-(seg.duration / seg.substeps) * a);
            for (int step = 0; step < seg.substeps; ++step) rho = x * rho * x.adjoint();
        }
        if (seg.measure_after) {
            double y = (s_tl[meas] * rho).trace().real();
            if (!shifted) y += s_shift[meas] * t_phys;
            rec.outputs.push_back(y);
            if (script.channel) {
                ComplexMatrix next = ComplexMatrix::Zero(n, n);
                for (const auto& w : script.channel->operators) next += w * rho * w.adjoint();
                rho = next;
            } else {
                rho = back_action(rho, s_spec[meas]);
            }
            DensityState post = rho0;
            post.matrix = shifted ? ComplexMatrix(rho - rho0.shift_record *
                                                             ComplexMatrix::Identity(n, n))
                                  : rho;
            rec.post_states.push_back(post);
            ++meas;
        }
    }
    return rec;
}

}  // namespace qobs
