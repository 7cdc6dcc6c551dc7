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

#ifndef QARROW_TOOLS_CLI_OUTPUT_H
#define QARROW_TOOLS_CLI_OUTPUT_H

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "qarrow/analytic.h"
#include "qarrow/ftlab.h"

namespace qarrow::cli {

/// Raised when an output file cannot be written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json ft_estimate_json(const FtEstimate &e);

/// left_edge,right_edge,density
std::string histogram_csv(const Histogram &h);

/// "# formula: <tag>" followed by x,value rows.
std::string curve_csv(const AnalyticCurve &c);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path &path, const std::string &content);

}  // namespace qarrow::cli

#endif
