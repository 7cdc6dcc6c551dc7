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

#include "quadratic_gaussian.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/erf.hpp>

#include "qarrow/errors.h"

namespace qarrow::detail {

namespace {
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
}

double QuadraticGaussian::mean() const {
    return 0.5 * a1 / normalization();
}

double QuadraticGaussian::variance() const {
    double m = mean();
    return (0.5 * a0 + 0.75 * a2) / normalization() - m * m;
}

double QuadraticGaussian::pdf(double x) const {
    return std::exp(-x * x) * (a0 + x * (a1 + a2 * x)) * kInvSqrtPi / normalization();
}

double QuadraticGaussian::cdf(double x) const {
    return 0.5 * std::erfc(-x) - (a1 + a2 * x) * std::exp(-x * x) * 0.5 * kInvSqrtPi / normalization();
}

double QuadraticGaussian::survival(double x) const {
    return 0.5 * std::erfc(x) + (a1 + a2 * x) * std::exp(-x * x) * 0.5 * kInvSqrtPi / normalization();
}

double QuadraticGaussian::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw NumericError("QuadraticGaussian::quantile: u must lie in (0, 1)");
    }
    // Work on whichever tail keeps the residual well conditioned.
    const bool upper = u > 0.5;
    const double target = upper ? 1.0 - u : u;
    auto residual = [&](double x) {
        return upper ? target - survival(x) : cdf(x) - target;
    };

    double lo = -40.0;
    double hi = 40.0;
    double sd = std::sqrt(std::max(variance(), 1e-300));
    double x = mean() + sd * std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
    if (!(x > lo && x < hi)) {
        x = 0.0;
    }

    for (int iter = 0; iter < 200; ++iter) {
        double g = residual(x);
        if (g == 0.0) {
            return x;
        }
        if (g > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        double d = pdf(x);
        double next = d > 0.0 ? x - g / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) <= 1e-14 * (1.0 + std::abs(x)) || hi - lo <= 1e-14 * (1.0 + std::abs(x))) {
            return next;
        }
        x = next;
    }
    std::ostringstream msg;
    msg << "QuadraticGaussian::quantile did not converge (u=" << u << ", a0=" << a0 << ", a1=" << a1
        << ", a2=" << a2 << ")";
    throw NumericError(msg.str());
}

}  // namespace qarrow::detail
