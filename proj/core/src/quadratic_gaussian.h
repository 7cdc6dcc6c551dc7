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

#ifndef QARROW_SRC_QUADRATIC_GAUSSIAN_H
#define QARROW_SRC_QUADRATIC_GAUSSIAN_H

namespace qarrow::detail {

/// Density proportional to exp(-x^2) (a0 + a1 x + a2 x^2) on the real line.
/// The quadratic must be non-negative everywhere.
///
/// Every continuous readout density of the homodyne and heterodyne schemes
/// (and both heterodyne marginals) has this form, and its CDF is closed form:
///   F(x) = erfc(-x)/2 - (a1 + a2 x) exp(-x^2) / (2 sqrt(pi) Z),  Z = a0 + a2/2.
struct QuadraticGaussian {
    double a0 = 1.0;
    double a1 = 0.0;
    double a2 = 0.0;

    double normalization() const {
        return a0 + 0.5 * a2;
    }
    double mean() const;
    double variance() const;

    double pdf(double x) const;
    double cdf(double x) const;
    double survival(double x) const;

    /// Solves cdf(x) = u for u in (0, 1) by Newton iteration safeguarded
    /// with bisection. Throws NumericError after 200 iterations.
    double quantile(double u) const;
};

}  // namespace qarrow::detail

#endif
