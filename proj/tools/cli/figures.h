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

#ifndef QARROW_TOOLS_CLI_FIGURES_H
#define QARROW_TOOLS_CLI_FIGURES_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace qarrow::cli {

struct FigureOptions {
    /// Trajectories per ensemble before scaling.
    std::size_t trajectories = 100000;
    /// Divides every trajectory count (at least 100 trajectories remain).
    double scale = 1.0;
    uint64_t seed = 1;
    std::size_t bins = 100;
    std::size_t workers = 1;
};

std::vector<std::string> figure_ids();

/// Writes every series of a figure as CSV into `dir` plus a manifest.json
/// describing them, and returns the manifest. Throws DomainError for an
/// unknown figure id.
nlohmann::json reproduce_figure(const std::string &id, const FigureOptions &options, const std::filesystem::path &dir);

}  // namespace qarrow::cli

#endif
