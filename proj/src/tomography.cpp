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

#include "qobs/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace qobs {

namespace {

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double next_gaussian(std::mt19937_64& rng) {
    const double u1 = 1.0 - next_unit(rng);
    const double u2 = next_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Lexicographically least index permutation sending the base diagonal to the
// target row; rows are exact rearrangements, so bitwise matching is safe.
std::vector<int> derive_permutation(const Eigen::VectorXd& base, const Eigen::VectorXd& row) {
    const int n = static_cast<int>(base.size());
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            if (!used[j] && base(j) == row(k)) {
                perm[k] = j;
                used[j] = true;
                break;
            }
        }
        detail::require(perm[k] >= 0, "derive_permutation: row is not a rearrangement");
    }
    return perm;
}

}  // namespace

ComplexMatrix permutation_unitary(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    detail::require(n >= 1, "permutation_unitary: empty permutation");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        detail::require(v >= 0 && v < n && !seen[v],
                        "permutation_unitary: not a permutation of 0..n-1");
        seen[v] = true;
    }
    ComplexMatrix x = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) x(perm[k], k) = Complex(1.0, 0.0);
    return x;
}

std::string cycle_notation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::string out;
    std::vector<bool> visited(n, false);
    for (int k = 0; k < n; ++k) {
        if (visited[k] || perm[k] == k) continue;
        out += "(";
        int j = k;
        bool first = true;
        while (!visited[j]) {
            visited[j] = true;
            if (!first) out += " ";
            out += std::to_string(j);
            first = false;
            j = perm[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

PermutationDesign design_permutation_experiment(const ComplexMatrix& s, const Tolerance& tol) {
    tol.validate();
    detail::require(s.rows() == s.cols() && s.rows() >= 2,
                    "design: observable must be square with dimension >= 2");
    const int n = static_cast<int>(s.rows());
    const double scale = std::max(1.0, frobenius_norm(s));
    detail::require(is_hermitian(s, tol.rank_tol * scale), "design: observable must be Hermitian");
    ComplexMatrix off = s;
    off.diagonal().setZero();
    detail::require(off.cwiseAbs().maxCoeff() <= tol.rank_tol * scale,
                    "design: observable must be diagonal");
    const ComplexMatrix s_tl = traceless_shift(s);
    if (frobenius_norm(s_tl) <= tol.rank_tol * scale)
        throw std::domain_error("design: observable is scalar, permuted rows carry no information");

    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = s_tl(i, i).real();

    PermutationDesign design;
    design.base_observable = d.cast<Complex>().asDiagonal();

    std::vector<double> sorted(d.data(), d.data() + n);
    std::sort(sorted.begin(), sorted.end());
    const double gap = tol.eig_tol * std::max(1.0, std::abs(sorted.back()));
    std::size_t start = 0;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i == sorted.size() || sorted[i] - sorted[i - 1] > gap) {
            double mean = 0.0;
            for (std::size_t j = start; j < i; ++j) mean += sorted[j];
            design.values.push_back(mean / static_cast<double>(i - start));
            design.multiplicities.push_back(static_cast<int>(i - start));
            start = i;
        }
    }

    // Incremental rank tracking over the row space, trace row first.
    std::vector<Eigen::VectorXd> ortho;
    auto try_add = [&](const Eigen::VectorXd& row) -> bool {
        Eigen::VectorXd res = row;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : ortho) res -= q.dot(res) * q;
        const double rn = res.norm();
        if (rn <= tol.rank_tol * std::max(1.0, row.norm())) return false;
        ortho.push_back(res / rn);
        return true;
    };
    try_add(Eigen::VectorXd::Ones(n));

    std::vector<Eigen::VectorXd> rows;
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    detail::require(try_add(d), "design: identity row unexpectedly dependent");
    rows.push_back(d);
    design.chosen_permutations.push_back(identity);

    // Distinct permuted rows in ascending lexicographic order; duplicates of
    // already-spanned rows are rejected by the rank test. The full permuted
    // set spans rank n (shifting rows by a multiple of the ones row makes the
    // values non-negative, where the factorial rank statement applies), so
    // the scan always terminates.
    std::vector<double> arr(sorted);
    long scanned = 0;
    do {
        if (static_cast<int>(ortho.size()) == n) break;
        if (++scanned > 2000000)
            throw std::runtime_error("design: rank scan failed to saturate; values are "
                                     "numerically pathological");
        const Eigen::VectorXd row = Eigen::Map<const Eigen::VectorXd>(arr.data(), n);
        if (try_add(row)) {
            rows.push_back(row);
            design.chosen_permutations.push_back(derive_permutation(d, row));
        }
    } while (std::next_permutation(arr.begin(), arr.end()));
    if (static_cast<int>(ortho.size()) < n)
        throw std::runtime_error("design: permuted rows failed to reach full rank");

    design.design_matrix.resize(static_cast<Eigen::Index>(rows.size()) + 1, n);
    for (std::size_t r = 0; r < rows.size(); ++r) design.design_matrix.row(r) = rows[r];
    design.design_matrix.row(static_cast<Eigen::Index>(rows.size())).setOnes();
    return design;
}

RankLemmaResult verify_rank_lemma(const std::vector<double>& values, const Tolerance& tol) {
    tol.validate();
    const int n = static_cast<int>(values.size());
    detail::require(n >= 2, "rank lemma: need at least two values");
    detail::require(n <= 7, "rank lemma: factorial row count above n = 7, use the greedy design");
    for (double v : values)
        detail::require(std::isfinite(v) && v >= 0.0, "rank lemma: values must be non-negative");

    long total = 1;
    for (int i = 2; i <= n; ++i) total *= i;
    Eigen::MatrixXd rows(total, n);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    Eigen::Index r = 0;
    do {
        for (int k = 0; k < n; ++k) rows(r, k) = values[static_cast<std::size_t>(idx[k])];
        ++r;
    } while (std::next_permutation(idx.begin(), idx.end()));

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
    qr.setThreshold(tol.rank_tol);
    RankLemmaResult res;
    res.rank = static_cast<int>(qr.rank());
    res.full = res.rank == n;
    return res;
}

ReconstructionResult run_permutation_tomography(const DensityState& rho0_true,
                                                const ComplexMatrix& x1,
                                                const ControlSystem& sys,
                                                const PermutationDesign& design,
                                                const Tolerance& tol, double noise_sigma,
                                                std::uint64_t noise_seed) {
    tol.validate();
    const int n = sys.dim_n;
    detail::require(rho0_true.dim() == n, "tomography: state/system dimension mismatch");
    detail::require(x1.rows() == n && x1.cols() == n && is_unitary(x1, tol.rank_tol),
                    "tomography: frame matrix must be unitary");
    detail::require(design.base_observable.rows() == n,
                    "tomography: design/system dimension mismatch");
    detail::require(frobenius_norm(design.base_observable - sys.observable) <=
                        tol.rank_tol * std::max(1.0, frobenius_norm(sys.observable)),
                    "tomography: design must be built from the system observable");
    detail::require(noise_sigma >= 0.0 && std::isfinite(noise_sigma),
                    "tomography: noise_sigma must be non-negative");

    const int n_rows = static_cast<int>(design.chosen_permutations.size());
    ExperimentScript script;
    {
        ScriptSegment seg;
        seg.has_unitary = true;
        seg.unitary = x1;
        seg.measure_after = true;
        script.segments.push_back(seg);
    }
    // Later evolutions are relative: X_{j+1} = Xbar_{j+1} Xbar_j*, so the
    // cumulative frame before measurement j is Xbar_j X1 and the j-th output
    // pairs with the j-th permuted row.
    ComplexMatrix prev = permutation_unitary(design.chosen_permutations.front());
    for (int j = 1; j < n_rows; ++j) {
        const ComplexMatrix xbar = permutation_unitary(design.chosen_permutations[j]);
        ScriptSegment seg;
        seg.has_unitary = true;
        seg.unitary = xbar * prev.adjoint();
        seg.measure_after = true;
        script.segments.push_back(seg);
        prev = xbar;
    }

    const MeasurementRecord rec = run_experiment(to_traceless(rho0_true), sys, script, tol);

    Eigen::VectorXd b(n_rows + 1);
    for (int j = 0; j < n_rows; ++j) b(j) = rec.outputs[static_cast<std::size_t>(j)];
    b(n_rows) = 0.0;
    if (noise_sigma > 0.0) {
        std::mt19937_64 rng(noise_seed);
        for (int j = 0; j < n_rows; ++j) b(j) += noise_sigma * next_gaussian(rng);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design.design_matrix,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(sv.size() - 1);
    if (smin <= tol.rank_tol * smax)
        throw std::domain_error("tomography: design matrix is singular");
    const Eigen::VectorXd x = svd.solve(b);

    ReconstructionResult out;
    out.diagonal.assign(x.data(), x.data() + n);
    out.residual = (design.design_matrix * x - b).norm();
    out.condition_estimate = smax / smin;
    return out;
}

std::vector<ComplexMatrix> state_parameter_basis(int n) {
    detail::require(n >= 2, "state_parameter_basis: dimension must be >= 2");
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(n) * n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        ComplexMatrix t = ComplexMatrix::Zero(n, n);
        t(i, i) = Complex(1.0, 0.0);
        t(n - 1, n - 1) = Complex(-1.0, 0.0);
        basis.push_back(t);
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            ComplexMatrix re = ComplexMatrix::Zero(n, n);
            re(j, k) = Complex(1.0, 0.0);
            re(k, j) = Complex(1.0, 0.0);
            basis.push_back(re);
            ComplexMatrix im = ComplexMatrix::Zero(n, n);
            im(j, k) = Complex(0.0, 1.0);
            im(k, j) = Complex(0.0, -1.0);
            basis.push_back(im);
        }
    }
    return basis;
}

std::vector<ComplexMatrix> default_ancilla_probes(int n, const DensityState& rho2_known,
                                                  const Tolerance& tol) {
    tol.validate();
    detail::require(n >= 2, "probes: unknown-state dimension must be >= 2");
    const int m = rho2_known.dim();
    const int dim_joint = n * m;
    const ComplexMatrix rho2 = physical_matrix(rho2_known);

    std::vector<int> slots;
    for (int a = 0; a < m; ++a)
        if (rho2(a, a).real() > tol.eig_tol) slots.push_back(a);
    detail::require(!slots.empty(), "probes: ancilla state has no usable diagonal weight");

    // One probe vector per state parameter, in state_parameter_basis order:
    // e_i exposes a diagonal entry, (e_j + e_k)/sqrt(2) a real part,
    // (e_j - i e_k)/sqrt(2) an imaginary part.
    std::vector<Eigen::VectorXcd> svecs;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i + 1 < n; ++i) {
        Eigen::VectorXcd s = Eigen::VectorXcd::Zero(n);
        s(i) = Complex(1.0, 0.0);
        svecs.push_back(s);
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            Eigen::VectorXcd re = Eigen::VectorXcd::Zero(n);
            re(j) = Complex(inv_sqrt2, 0.0);
            re(k) = Complex(inv_sqrt2, 0.0);
            svecs.push_back(re);
            Eigen::VectorXcd im = Eigen::VectorXcd::Zero(n);
            im(j) = Complex(inv_sqrt2, 0.0);
            im(k) = Complex(0.0, -inv_sqrt2);
            svecs.push_back(im);
        }
    }

    // Pack vectors onto ancilla slots: a slot can host several vectors only
    // when they are pairwise orthogonal; open a fresh probe when no slot of
    // the current probes fits.
    struct Draft {
        std::vector<std::vector<Eigen::VectorXcd>> occupants;
        std::vector<std::pair<int, Eigen::VectorXcd>> columns;
    };
    std::vector<Draft> drafts;
    auto fits = [&](const std::vector<Eigen::VectorXcd>& occupants, const Eigen::VectorXcd& s) {
        for (const auto& o : occupants)
            if (std::abs(o.dot(s)) > tol.rank_tol) return false;
        return true;
    };
    for (const auto& s : svecs) {
        bool placed = false;
        for (auto& draft : drafts) {
            for (std::size_t si = 0; si < slots.size() && !placed; ++si) {
                if (fits(draft.occupants[si], s)) {
                    draft.occupants[si].push_back(s);
                    draft.columns.emplace_back(slots[si], s);
                    placed = true;
                }
            }
            if (placed) break;
        }
        if (!placed) {
            Draft fresh;
            fresh.occupants.resize(slots.size());
            fresh.occupants[0].push_back(s);
            fresh.columns.emplace_back(slots[0], s);
            drafts.push_back(std::move(fresh));
        }
    }

    std::vector<ComplexMatrix> probes;
    probes.reserve(drafts.size());
    for (const auto& draft : drafts) {
        ComplexMatrix designated(dim_joint, static_cast<Eigen::Index>(draft.columns.size()));
        for (std::size_t c = 0; c < draft.columns.size(); ++c) {
            Eigen::VectorXcd col = Eigen::VectorXcd::Zero(dim_joint);
            const int a = draft.columns[c].first;
            const Eigen::VectorXcd& s = draft.columns[c].second;
            for (int i = 0; i < n; ++i) col(i * m + a) = s(i);
            designated.col(static_cast<Eigen::Index>(c)) = col;
        }
        // The designated columns are orthonormal by construction, so the QR
        // factor reproduces them up to unit phases (which leave the probed
        // diagonal entries unchanged) and appends an orthonormal completion.
        Eigen::HouseholderQR<ComplexMatrix> qr(designated);
        const ComplexMatrix q_full = qr.householderQ();
        probes.push_back(q_full.adjoint());
    }
    return probes;
}

AncillaResult ancilla_tomography(const DensityState& rho1_unknown,
                                 const DensityState& rho2_known, const ComplexMatrix& s_joint,
                                 const std::vector<ComplexMatrix>& probes,
                                 const ControlSystem& sys, const Tolerance& tol) {
    tol.validate();
    const int n = rho1_unknown.dim();
    const int m = rho2_known.dim();
    const int dim_joint = n * m;
    detail::require(sys.dim_n == dim_joint, "ancilla: system dimension must equal n*m");
    detail::require(s_joint.rows() == dim_joint && s_joint.cols() == dim_joint,
                    "ancilla: joint observable dimension mismatch");
    detail::require(frobenius_norm(traceless_shift(s_joint) - sys.observable) <=
                        tol.rank_tol * std::max(1.0, frobenius_norm(s_joint)),
                    "ancilla: system observable must match the joint observable");
    detail::require(!probes.empty(), "ancilla: need at least one probe unitary");

    const PermutationDesign design = design_permutation_experiment(s_joint, tol);

    const ComplexMatrix rho2 = physical_matrix(rho2_known);
    DensityState joint;
    joint.matrix = kron(physical_matrix(rho1_unknown), rho2);
    joint.convention = StateConvention::trace_one;

    const std::vector<ComplexMatrix> t_basis = state_parameter_basis(n);
    const int n_params = n * n - 1;
    ComplexMatrix rho_base = ComplexMatrix::Zero(n, n);
    rho_base(n - 1, n - 1) = Complex(1.0, 0.0);

    const Eigen::Index total_rows = static_cast<Eigen::Index>(probes.size()) * dim_joint;
    Eigen::MatrixXd sens(total_rows, n_params);
    Eigen::VectorXd b(total_rows);
    for (std::size_t p = 0; p < probes.size(); ++p) {
        const ComplexMatrix& x1 = probes[p];
        detail::require(x1.rows() == dim_joint && x1.cols() == dim_joint &&
                            is_unitary(x1, tol.rank_tol),
                        "ancilla: probe " + std::to_string(p) + " must be a joint-dim unitary");
        const ReconstructionResult rec = run_permutation_tomography(joint, x1, sys, design, tol);

        const ComplexMatrix base_img = x1 * kron(rho_base, rho2) * x1.adjoint();
        for (int a = 0; a < dim_joint; ++a) {
            const Eigen::Index ri = static_cast<Eigen::Index>(p) * dim_joint + a;
            b(ri) = rec.diagonal[static_cast<std::size_t>(a)] -
                    (base_img(a, a).real() - 1.0 / dim_joint);
        }
        for (int q = 0; q < n_params; ++q) {
            const ComplexMatrix img = x1 * kron(t_basis[static_cast<std::size_t>(q)], rho2) *
                                      x1.adjoint();
            for (int a = 0; a < dim_joint; ++a)
                sens(static_cast<Eigen::Index>(p) * dim_joint + a, q) = img(a, a).real();
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sens, Eigen::ComputeThinU | Eigen::ComputeFullV);
    svd.setThreshold(tol.rank_tol);
    AncillaResult out;
    out.sensitivity_rank = static_cast<int>(svd.rank());
    out.injective = out.sensitivity_rank == n_params;
    for (int q = out.sensitivity_rank; q < n_params; ++q)
        out.unobserved_directions.push_back(svd.matrixV().col(q));

    const Eigen::VectorXd theta = svd.solve(b);
    out.residual = (sens * theta - b).norm();
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    out.condition_estimate =
        smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();

    out.rho1 = rho_base;
    for (int q = 0; q < n_params; ++q)
        out.rho1 += theta(q) * t_basis[static_cast<std::size_t>(q)];
    return out;
}

}  // namespace qobs
