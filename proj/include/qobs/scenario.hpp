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

#ifndef QOBS_SCENARIO_HPP
#define QOBS_SCENARIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qobs/measurement.hpp"
#include "qobs/serialize.hpp"
#include "qobs/system.hpp"

namespace qobs {

struct AnalysisOptions {
    /// 0 means automatic: run the recursion to its fixpoint, capped at the
    /// ambient dimension n^2 - 1.
    int max_k = 0;
    Tolerance tol;
    std::uint64_t seed = 0;
};

/// Inputs for the reconstruction commands; names refer to the states map.
struct TomographySetup {
    std::string state;
    std::optional<ComplexMatrix> frame;
    double noise_sigma = 0.0;
    std::string unknown_state;
    std::string known_state;
    std::vector<ComplexMatrix> probes;
};

/// One self-contained problem description: a control system plus named
/// states, experiment scripts, and channels, all validated at load time.
struct Scenario {
    int schema_version = 1;
    ControlSystem system;
    std::map<std::string, DensityState> states;
    std::map<std::string, ExperimentScript> scripts;
    std::map<std::string, KrausChannel> channels;
    /// Script name -> channels-map name, kept so a resolved script's channel
    /// reference survives serialization.
    std::map<std::string, std::string> script_channels;
    AnalysisOptions analysis;
    std::optional<TomographySetup> tomography;
};

/// Builds a scenario from its document form. Every failure throws
/// std::invalid_argument whose message starts with the dotted path of the
/// offending field (for example "scripts.probe.segments[0].duration").
/// Scripts may name a channel from the channels map; the reference is
/// resolved here.
Scenario scenario_from_json(const Json& doc);

/// Reads and parses a scenario file; throws std::invalid_argument on I/O or
/// syntax errors.
Scenario load_scenario(const std::string& path);

/// Document form of a scenario, inverse of scenario_from_json up to matrix
/// normalization (generators and observable are stored in shifted form).
Json scenario_to_json(const Scenario& sc);

int effective_max_k(const AnalysisOptions& opts, int dim_n);

}  // namespace qobs

#endif  // QOBS_SCENARIO_HPP
