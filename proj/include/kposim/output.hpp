// Copyright 2026 The kposim Authors
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

#pragma once

#include <string>

#include <json.hpp>

#include "kposim/config.hpp"
#include "kposim/eigenanalysis.hpp"
#include "kposim/estimator.hpp"
#include "kposim/perturbation.hpp"

// Deterministic CSV/JSON writers: '.' decimal, '\n' line endings, stable key
// order, no timestamps. Every JSON document embeds the config snapshot.

namespace kposim {

using Json = nlohmann::ordered_json;

std::string format_double(double x);  // shortest round-trip decimal

std::string sweep_csv(const SweepResult& s);
std::string trajectory_csv(const Trajectory& t);
std::string scan_csv(const std::vector<ScanRow>& rows);

Json config_json(const RunConfig& c);
Json extrema_json(const std::vector<ExtremumPoint>& extrema, const RunConfig& c);
Json estimation_json(const EstimationReport& r, const RunConfig& c);
Json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c);
Json eigen_json(const SpectrumTable& s, const std::vector<Transition>& transitions,
                const RunConfig& c);
Json resonances_json(const std::vector<Resonance>& rs, double alpha, const RunConfig& c);
Json steady_json(double photon_number, const ConvergenceReport& conv, const BifurcationCheck& bif,
                 const RunConfig& c);

/// Write text to path atomically-ish (truncate + write + flush); creates
/// parent directories.
void write_file(const std::string& path, const std::string& text);

}  // namespace kposim
