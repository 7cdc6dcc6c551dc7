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

#ifndef QARROW_TOOLS_CLI_CURVES_H
#define QARROW_TOOLS_CLI_CURVES_H

#include <optional>
#include <string>
#include <vector>

#include "qarrow/analytic.h"

namespace qarrow::cli {

struct CurveParams {
    double k = 0.25;
    double z0 = 0.0;
    double t_ratio = 1.0;
    double epsilon = 0.5;
};

/// Names accepted by make_curve.
std::vector<std::string> curve_names();

/// Tabulates the named closed form on `points` grid points. The range
/// defaults to the natural domain of the formula. Throws DomainError for
/// unknown names or an empty grid.
AnalyticCurve make_curve(const std::string &name, const CurveParams &params, std::optional<double> lo,
                         std::optional<double> hi, std::size_t points);

}  // namespace qarrow::cli

#endif
