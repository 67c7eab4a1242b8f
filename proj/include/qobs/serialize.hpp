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

#ifndef QOBS_SERIALIZE_HPP
#define QOBS_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qobs/matrix.hpp"
#include "qobs/measurement.hpp"
#include "qobs/observability.hpp"
#include "qobs/tomography.hpp"

namespace qobs {

/// Insertion-ordered JSON so emitted documents keep a fixed key layout; the
/// build functions below always insert in the same order, which makes output
/// byte-identical for identical inputs.
using Json = nlohmann::ordered_json;

/// Complex scalars serialize as [re, im]; matrices as row-major nested
/// arrays of such pairs.
Json to_json(const Complex& z);
Json to_json(const ComplexMatrix& m);
Json to_json(const Eigen::VectorXd& v);
Json to_json(const Eigen::MatrixXd& m);

Json to_json(const DensityState& s);
Json to_json(const MeasurementRecord& r);
Json to_json(const ObservabilityReport& r);
Json to_json(const IndistinguishabilityVerdict& v);
Json to_json(const PermutationDesign& d);
Json to_json(const ReconstructionResult& r);
Json to_json(const AncillaResult& r);

/// Parsers throw std::invalid_argument naming `path` on shape or type
/// errors. A complex entry is [re, im]; a bare number is accepted as a real
/// shorthand.
Complex complex_from_json(const Json& j, const std::string& path);
ComplexMatrix matrix_from_json(const Json& j, const std::string& path);
std::vector<double> reals_from_json(const Json& j, const std::string& path);

/// Fixed-layout plain-text rendering of a report document: objects as
/// "key: value" lines, nested structures indented, numeric rows inline.
std::string to_text(const Json& doc);

}  // namespace qobs

#endif  // QOBS_SERIALIZE_HPP
