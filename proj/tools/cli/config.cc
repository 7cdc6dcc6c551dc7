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

#include "config.h"

#include <cmath>
#include <sstream>

#include "qarrow/errors.h"

namespace qarrow::cli {

namespace {

const char *const kFields[] = {"scheme", "k", "tau", "gamma", "omega", "dt", "duration", "nTrajectories",
                               "masterSeed", "x0", "out", "bins", "workers"};

template <typename T>
void read_field(const nlohmann::json &j, const char *name, T &dst) {
    if (!j.contains(name) || j.at(name).is_null()) {
        return;
    }
    try {
        dst = j.at(name).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("config field '") + name + "': " + e.what());
    }
}

}  // namespace

ResolvedExperiment resolve(const ExperimentConfig &config) {
    ResolvedExperiment r;
    SchemeKind kind = parse_scheme_kind(config.scheme);
    double dt = 1.0;
    double duration = 0.0;
    switch (kind) {
        case SchemeKind::TwoOutcome:
            dt = config.dt.value_or(1.0);
            duration = config.duration.value_or(dt);
            r.scheme = MeasurementScheme::two_outcome(config.k, config.omega, dt);
            break;
        case SchemeKind::Dispersive:
            if (!(config.tau > 0.0)) {
                throw DomainError("tau must be positive");
            }
            dt = config.dt.value_or(config.tau / 100.0);
            duration = config.duration.value_or(config.tau);
            r.scheme = MeasurementScheme::dispersive(config.tau, dt, config.omega);
            break;
        case SchemeKind::Homodyne:
        case SchemeKind::Heterodyne:
            if (!(config.gamma > 0.0)) {
                throw DomainError("gamma must be positive");
            }
            dt = config.dt.value_or(1.0 / (100.0 * config.gamma));
            duration = config.duration.value_or(1.0 / config.gamma);
            r.scheme = kind == SchemeKind::Homodyne ? MeasurementScheme::homodyne(config.gamma, dt, config.omega)
                                                    : MeasurementScheme::heterodyne(config.gamma, dt, config.omega);
            break;
    }
    double ratio = duration / dt;
    double steps = std::round(ratio);
    if (!(steps >= 1.0) || std::abs(ratio - steps) > 1e-9 * steps) {
        std::ostringstream msg;
        msg << "duration " << duration << " is not a positive integer multiple of dt " << dt;
        throw DomainError(msg.str());
    }
    r.steps = static_cast<std::size_t>(steps);
    r.x0 = state_from_bloch({config.x0[0], config.x0[1], config.x0[2]});
    if (config.n_trajectories == 0) {
        throw DomainError("nTrajectories must be positive");
    }
    r.n_trajectories = config.n_trajectories;
    r.master_seed = config.master_seed;
    r.bins = config.bins;
    r.workers = config.workers == 0 ? 1 : config.workers;
    return r;
}

nlohmann::json to_json(const ExperimentConfig &config) {
    nlohmann::json j;
    j["scheme"] = config.scheme;
    j["k"] = config.k;
    j["tau"] = config.tau;
    j["gamma"] = config.gamma;
    j["omega"] = config.omega;
    j["dt"] = config.dt ? nlohmann::json(*config.dt) : nlohmann::json(nullptr);
    j["duration"] = config.duration ? nlohmann::json(*config.duration) : nlohmann::json(nullptr);
    j["nTrajectories"] = config.n_trajectories;
    j["masterSeed"] = config.master_seed;
    j["x0"] = config.x0;
    j["out"] = config.out;
    j["bins"] = config.bins;
    j["workers"] = config.workers;
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw DomainError("config must be a JSON object");
    }
    for (const auto &[key, value] : j.items()) {
        bool known = false;
        for (const char *f : kFields) {
            known |= key == f;
        }
        if (!known) {
            throw DomainError("unknown config field '" + key + "'");
        }
    }
    ExperimentConfig c;
    read_field(j, "scheme", c.scheme);
    read_field(j, "k", c.k);
    read_field(j, "tau", c.tau);
    read_field(j, "gamma", c.gamma);
    read_field(j, "omega", c.omega);
    for (auto [name, dst] : {std::pair{"dt", &c.dt}, std::pair{"duration", &c.duration}}) {
        double v = 0.0;
        if (j.contains(name) && !j.at(name).is_null()) {
            read_field(j, name, v);
            *dst = v;
        }
    }
    read_field(j, "nTrajectories", c.n_trajectories);
    read_field(j, "masterSeed", c.master_seed);
    read_field(j, "x0", c.x0);
    read_field(j, "out", c.out);
    read_field(j, "bins", c.bins);
    read_field(j, "workers", c.workers);
    return c;
}

std::array<double, 3> parse_bloch(const std::string &text) {
    std::array<double, 3> v{};
    std::istringstream in(text);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',')) {
        if (i == 3) {
            throw DomainError("--bloch expects exactly three components, got '" + text + "'");
        }
        try {
            std::size_t used = 0;
            v[i] = std::stod(part, &used);
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
        } catch (const std::exception &) {
            throw DomainError("--bloch: cannot parse '" + part + "'");
        }
        ++i;
    }
    if (i != 3) {
        throw DomainError("--bloch expects exactly three components, got '" + text + "'");
    }
    return v;
}

}  // namespace qarrow::cli
