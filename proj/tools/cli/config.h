// Copyright 2026 The qarrow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QARROW_TOOLS_CLI_CONFIG_H
#define QARROW_TOOLS_CLI_CONFIG_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "qarrow/qmath.h"
#include "qarrow/schemes.h"

namespace qarrow::cli {

/// Flat experiment description shared by every subcommand. Unset optional
/// fields take scheme-dependent defaults in resolve().
struct ExperimentConfig {
    std::string scheme = "dispersive";
    double k = 0.25;
    double tau = 1.0;
    double gamma = 1.0;
    double omega = 0.0;
    std::optional<double> dt;
    std::optional<double> duration;
    std::size_t n_trajectories = 100000;
    uint64_t master_seed = 1;
    std::array<double, 3> x0 = {1.0, 0.0, 0.0};
    std::string out;
    std::size_t bins = 100;
    std::size_t workers = 1;

    bool operator==(const ExperimentConfig &) const = default;
};

/// A config with every default filled in and validated.
struct ResolvedExperiment {
    MeasurementScheme scheme;
    std::size_t steps = 1;
    PureQubitState x0;
    std::size_t n_trajectories = 0;
    uint64_t master_seed = 0;
    std::size_t bins = 0;
    std::size_t workers = 1;
};

/// Throws DomainError for unknown schemes, a non-unit x0, a duration that is
/// not a positive integer multiple of dt, or out-of-range parameters.
///
/// Defaults: dt = tau/100 (dispersive), 1/(100 gamma) (homodyne, heterodyne),
/// 1 (two-outcome); duration = tau, 1/gamma, or a single step respectively.
ResolvedExperiment resolve(const ExperimentConfig &config);

nlohmann::json to_json(const ExperimentConfig &config);

/// Reads the flat JSON form. Missing fields keep their defaults; unknown
/// fields are rejected with DomainError.
ExperimentConfig config_from_json(const nlohmann::json &j);

/// Parses "x,y,z".
std::array<double, 3> parse_bloch(const std::string &text);

}  // namespace qarrow::cli

#endif
