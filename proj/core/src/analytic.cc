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

#include "qarrow/analytic.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "qarrow/errors.h"
#include "qarrow/trajectory.h"

namespace qarrow {

namespace {

void require(bool ok, const char *what) {
    if (!ok) {
        throw DomainError(what);
    }
}

// artanh(sqrt(lambda)) = arccosh(1 / sqrt(1 - lambda)), stable at both ends.
double integrated_signal(double lambda) {
    return std::log1p(std::sqrt(lambda)) - 0.5 * std::log1p(-lambda);
}

double log_p_lambda(double lambda, double t_ratio) {
    double big_r = integrated_signal(lambda);
    return -0.5 * std::log(2.0 * std::numbers::pi * t_ratio) - 1.5 * std::log1p(-lambda) - 0.5 * std::log(lambda) -
           0.5 * t_ratio - 0.5 * big_r * big_r / t_ratio;
}

}  // namespace

double mu_k(double k, double z0) {
    require(k >= 0.0 && k <= 0.5, "mu_k: k must lie in [0, 1/2]");
    require(z0 >= -1.0 && z0 <= 1.0, "mu_k: z0 must lie in [-1, 1]");
    double s = (1.0 - 2.0 * k) * (1.0 - 2.0 * k);
    double den = 1.0 - s * z0 * z0;
    if (den == 0.0) {
        // k = 0 at a pole: the limit along z0 is 0.
        return 0.0;
    }
    return s * (1.0 - z0 * z0) / den;
}

double avg_q_k(double k, double z0) {
    require(k > 0.0 && k <= 0.5, "avg_q_k: <Q_k> diverges unless k lies in (0, 1/2]");
    require(z0 >= -1.0 && z0 <= 1.0, "avg_q_k: z0 must lie in [-1, 1]");
    double p_plus = 0.5 * (1.0 + z0 * (1.0 - 2.0 * k));
    // Relative entropy, clamped at zero against rounding.
    return std::max(0.0, p_plus * q_two_outcome(k, z0, 1) + (1.0 - p_plus) * q_two_outcome(k, z0, -1));
}

double q_z(double big_r, double z0) {
    require(z0 >= -1.0 && z0 <= 1.0, "q_z: z0 must lie in [-1, 1]");
    require(!std::isnan(big_r), "q_z: R is NaN");
    // cosh R + z0 sinh R = e^{|R|}/2 [(1 + z0 s) + (1 - z0 s) e^{-2|R|}], s = sign R.
    double s = big_r >= 0.0 ? 1.0 : -1.0;
    double a = std::abs(big_r);
    if (std::isinf(a)) {
        return 1.0 + z0 * s > 0.0 ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
    }
    double inner = (1.0 + z0 * s) + (1.0 - z0 * s) * std::exp(-2.0 * a);
    return 2.0 * (a - std::numbers::ln2 + std::log(inner));
}

double p_lambda_dispersive(double lambda, double t_ratio) {
    require(lambda > 0.0 && lambda < 1.0, "p_lambda_dispersive: lambda must lie in (0, 1)");
    require(t_ratio > 0.0, "p_lambda_dispersive: T/tau must be positive");
    return std::exp(log_p_lambda(lambda, t_ratio));
}

double p_q_dispersive(double q, double t_ratio) {
    require(t_ratio > 0.0, "p_q_dispersive: T/tau must be positive");
    if (!(q > 0.0) || std::isinf(q)) {
        return 0.0;
    }
    double lambda = -std::expm1(-q);
    if (!(lambda < 1.0)) {
        return 0.0;
    }
    // P(Q) = P(lambda(Q)) dlambda/dQ with dlambda/dQ = e^{-Q}.
    return std::exp(log_p_lambda(lambda, t_ratio) - q);
}

double mu_dispersive_exact(double t_ratio) {
    require(t_ratio > 0.0, "mu_dispersive_exact: T/tau must be positive");
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(
        [&](double lambda) {
            if (!(lambda > 0.0 && lambda < 1.0)) {
                return 0.0;
            }
            return lambda * std::exp(log_p_lambda(lambda, t_ratio));
        },
        0.0, 1.0);
}

double exp_neg_q_dispersive_exact(double t_ratio) {
    require(t_ratio > 0.0, "exp_neg_q_dispersive_exact: T/tau must be positive");
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate([&](double q) { return std::exp(-q) * p_q_dispersive(q, t_ratio); }, 0.0,
                                std::numeric_limits<double>::infinity());
}

double q_homodyne_single_step(double eps, double r) {
    require(eps >= 0.0 && eps < 1.0, "q_homodyne_single_step: eps must lie in [0, 1)");
    double f = 1.0 - 0.25 * eps + std::sqrt(eps) * r + 0.5 * eps * r * r;
    return 2.0 * std::log(f) - std::log1p(-0.5 * eps);
}

double q_min_homodyne(double eps) {
    require(eps > 0.0 && eps < 1.0, "q_min_homodyne: eps must lie in (0, 1)");
    return 2.0 * std::log(std::sqrt(1.0 - 0.5 * eps) / 2.0);
}

double readout_pdf_homodyne_plus_x(double eps, double r) {
    return std::exp(-r * r) * std::numbers::inv_sqrtpi * (1.0 + std::sqrt(eps) * r - 0.25 * eps + 0.5 * r * r * eps);
}

double pdf_q_homodyne_single_step(double eps, double q) {
    require(eps > 0.0 && eps < 1.0, "pdf_q_homodyne_single_step: eps must lie in (0, 1)");
    // Q = 2 log f - log(1 - eps/2), f(r) = (eps/2)(r + 1/sqrt(eps))^2 + (1 - eps/2)/2.
    double f = std::exp(0.5 * q) * std::sqrt(1.0 - 0.5 * eps);
    double d = (2.0 / eps) * (f - 0.5 * (1.0 - 0.5 * eps));
    if (!(d > 0.0) || !std::isfinite(d)) {
        return 0.0;
    }
    double root = std::sqrt(d);
    double center = -1.0 / std::sqrt(eps);
    // |dQ/dr| = 2 eps |r + 1/sqrt(eps)| / f, identical on both branches.
    double jacobian = 2.0 * eps * root / f;
    return (readout_pdf_homodyne_plus_x(eps, center + root) + readout_pdf_homodyne_plus_x(eps, center - root)) /
           jacobian;
}

double mean_mu_flat_z(double k) {
    require(k >= 0.0 && k <= 0.5, "mean_mu_flat_z: k must lie in [0, 1/2]");
    if (k == 0.0) {
        return 1.0;
    }
    double x = 1.0 - 2.0 * k;
    // artanh(x)/x = 1 + x^2/3 + x^4/5 + ...
    double ratio = std::abs(x) < 1e-4 ? 1.0 + x * x / 3.0 + x * x * x * x / 5.0 : std::atanh(x) / x;
    return 1.0 - 4.0 * k * (1.0 - k) * ratio;
}

double homodyne_effective_readout(std::span<const double> record, double eps) {
    require(!record.empty(), "homodyne_effective_readout: empty record");
    require(eps >= 0.0 && eps < 1.0, "homodyne_effective_readout: eps must lie in [0, 1)");
    double decay = std::sqrt(1.0 - 0.5 * eps);
    double weight = 1.0;
    double y = 0.0;
    for (double r : record) {
        y += r * weight;
        weight *= decay;
    }
    return y / std::sqrt(static_cast<double>(record.size()));
}

AnalyticCurve tabulate(std::string tag, std::span<const double> grid, const std::function<double(double)> &f) {
    AnalyticCurve c{std::move(tag), {grid.begin(), grid.end()}, {}};
    c.values.reserve(grid.size());
    for (double x : grid) {
        c.values.push_back(f(x));
    }
    return c;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

}  // namespace qarrow
