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

#include "qobs/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qobs {

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Eigen::VectorXd& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const DensityState& s) {
    Json j;
    j["matrix"] = to_json(s.matrix);
    j["convention"] =
        s.convention == StateConvention::trace_one ? "trace_one" : "traceless_shifted";
    j["shift_record"] = s.shift_record;
    return j;
}

Json to_json(const MeasurementRecord& r) {
    Json j;
    j["outputs"] = r.outputs;
    j["script_hash"] = r.script_hash;
    Json posts = Json::array();
    for (const auto& s : r.post_states) posts.push_back(to_json(s));
    j["post_states"] = std::move(posts);
    return j;
}

Json to_json(const ObservabilityReport& r) {
    Json j;
    j["dim_n"] = r.dim_n;
    j["dim_L"] = r.dim_L;
    j["controllable"] = r.controllable;
    j["dims_Vk"] = r.dims_Vk;
    j["saturation_k"] = r.saturation_k;
    j["saturated"] = r.saturated;
    j["observable_one_step"] = r.observable_one_step;
    j["observable_k"] = r.observable_k;
    j["observable_overall"] = r.observable_overall;
    j["first_order_condition"] = r.first_order_condition;
    j["bracket_dims"] = Json::array({r.prop4_dims.first, r.prop4_dims.second});
    return j;
}

Json to_json(const IndistinguishabilityVerdict& v) {
    Json j;
    j["indistinguishable"] = v.indistinguishable;
    j["k_used"] = v.k_used;
    j["max_coordinate"] = v.max_coordinate;
    return j;
}

Json to_json(const PermutationDesign& d) {
    Json j;
    Json diag = Json::array();
    for (Eigen::Index i = 0; i < d.base_observable.rows(); ++i)
        diag.push_back(d.base_observable(i, i).real());
    j["base_diagonal"] = std::move(diag);
    j["values"] = d.values;
    j["multiplicities"] = d.multiplicities;
    j["permutations"] = d.chosen_permutations;
    Json cycles = Json::array();
    for (const auto& p : d.chosen_permutations) cycles.push_back(cycle_notation(p));
    j["cycles"] = std::move(cycles);
    j["design_matrix"] = to_json(d.design_matrix);
    return j;
}

Json to_json(const ReconstructionResult& r) {
    Json j;
    j["diagonal"] = r.diagonal;
    j["residual"] = r.residual;
    j["condition_estimate"] = r.condition_estimate;
    return j;
}

Json to_json(const AncillaResult& r) {
    Json j;
    j["rho1"] = to_json(r.rho1);
    j["residual"] = r.residual;
    j["condition_estimate"] = r.condition_estimate;
    j["sensitivity_rank"] = r.sensitivity_rank;
    j["injective"] = r.injective;
    Json dirs = Json::array();
    for (const auto& v : r.unobserved_directions) dirs.push_back(to_json(v));
    j["unobserved_directions"] = std::move(dirs);
    return j;
}

Complex complex_from_json(const Json& j, const std::string& path) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(path + ": expected [re, im] or a real number");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(path + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    ComplexMatrix m;
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.empty())
            throw std::invalid_argument(row_path + ": expected a non-empty row array");
        if (r == 0) {
            cols = row.size();
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (row.size() != cols) {
            throw std::invalid_argument(row_path + ": ragged row, expected " +
                                        std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from_json(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

std::vector<double> reals_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw std::invalid_argument(path + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number())
            throw std::invalid_argument(path + "[" + std::to_string(i) + "]: expected a number");
        out.push_back(j[i].get<double>());
    }
    return out;
}

namespace {

bool is_scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!e.is_primitive()) return false;
    return true;
}

// Numeric-pair arrays ([re, im] entries) also render inline.
bool is_row_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!is_scalar_array(e) && !e.is_primitive()) return false;
    return true;
}

void render_inline(const Json& j, std::ostringstream& out) {
    if (j.is_array()) {
        out << "[";
        bool first = true;
        for (const auto& e : j) {
            if (!first) out << ", ";
            first = false;
            render_inline(e, out);
        }
        out << "]";
    } else {
        out << j.dump();
    }
}

void render(const Json& j, std::ostringstream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            out << pad << key << ":";
            if (value.is_primitive() || is_row_array(value)) {
                out << " ";
                render_inline(value, out);
                out << "\n";
            } else {
                out << "\n";
                render(value, out, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_primitive() || is_row_array(e)) {
                out << pad << "- ";
                render_inline(e, out);
                out << "\n";
            } else {
                out << pad << "-\n";
                render(e, out, indent + 1);
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string to_text(const Json& doc) {
    std::ostringstream out;
    render(doc, out, 0);
    return out.str();
}

}  // namespace qobs
