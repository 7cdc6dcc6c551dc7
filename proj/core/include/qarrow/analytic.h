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

#ifndef QARROW_ANALYTIC_H
#define QARROW_ANALYTIC_H

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qarrow {

// Closed-form reference results for the arrow of time Q and the absolute
// irreversibility mu. Dispersive formulas with t_ratio = T / tau assume no
// Rabi drive and an initial state on the equator (z0 = 0).

/// mu_k = (1-2k)^2 (1-z0^2) / (1 - (1-2k)^2 z0^2), two-outcome measurement.
double mu_k(double k, double z0);

/// Average of Q_k over the two outcomes. Throws DomainError for k = 0.
double avg_q_k(double k, double z0);

/// Q_z = 2 log[cosh R + z0 sinh R], dispersive measurement with integrated
/// signal R = dt sum_n r_n / tau. Returns -inf in the z0 = -+1, R -> +-inf limit.
double q_z(double big_r, double z0);

/// Density of lambda = tanh^2 R on (0, 1). Throws DomainError outside (0, 1).
double p_lambda_dispersive(double lambda, double t_ratio);

/// Density of Q = -log(1 - lambda); zero for Q <= 0.
double p_q_dispersive(double q, double t_ratio);

/// mu = integral of lambda P(lambda) over (0, 1), by tanh-sinh quadrature.
double mu_dispersive_exact(double t_ratio);

/// <exp(-Q)> = integral of exp(-Q) P(Q) over (0, inf), by quadrature.
double exp_neg_q_dispersive_exact(double t_ratio);

/// Single homodyne step from the +x eigenstate, from the determinant identity
/// Q = 2 log <x0|M^dagger M|x0> - log|det M|^2:
///   Q(r) = 2 log(1 - eps/4 + sqrt(eps) r + eps r^2/2) - log(1 - eps/2).
double q_homodyne_single_step(double eps, double r);

/// Minimum 2 log[sqrt(1 - eps/2) / 2], reached at r = -1/sqrt(eps).
double q_min_homodyne(double eps);

/// P(r | +x) = exp(-r^2)/sqrt(pi) (1 + sqrt(eps) r - eps/4 + eps r^2/2).
double readout_pdf_homodyne_plus_x(double eps, double r);

/// Density of q_homodyne_single_step over readouts drawn from +x; sums both
/// readout branches. Zero below q_min_homodyne.
double pdf_q_homodyne_single_step(double eps, double q);

/// <mu>_{x0} for z0 uniform on [-1, 1]: 1 - 4k(1-k) artanh(1-2k) / (1-2k).
double mean_mu_flat_z(double k);

/// y(r) = N^{-1/2} sum_n r_n (1 - eps/2)^{n/2}, n = 0 .. N-1: N homodyne steps
/// of strength eps act like one step of strength N eps with readout y.
double homodyne_effective_readout(std::span<const double> record, double eps);

/// A formula tabulated on a grid.
struct AnalyticCurve {
    std::string tag;
    std::vector<double> x;
    std::vector<double> values;
};

AnalyticCurve tabulate(std::string tag, std::span<const double> grid, const std::function<double(double)> &f);

/// n points evenly spaced on [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qarrow

#endif
