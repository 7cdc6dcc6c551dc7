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

#ifndef QARROW_FTLAB_H
#define QARROW_FTLAB_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qarrow/qmath.h"
#include "qarrow/random.h"
#include "qarrow/schemes.h"
#include "qarrow/trajectory.h"

namespace qarrow {

/// Ensemble estimate of both sides of <exp(-Q)> = 1 - mu.
///
/// mu_hat is the forward-ensemble mean of lambda. Since exp(-Q) + lambda = b/a
/// per trajectory, consistency (the mean of that sum) has expectation exactly
/// one and its standard error is the paired error of the FT residual.
struct FtEstimate {
    double mean_exp_neg_q = 0.0;
    double mean_exp_neg_q_stderr = 0.0;
    double mu_hat = 0.0;
    double mu_hat_stderr = 0.0;
    double mean_q = 0.0;
    double mean_q_stderr = 0.0;
    /// -log(1 - mu_hat), the lower bound on <Q>.
    double bound = 0.0;
    double bound_stderr = 0.0;
    double consistency = 0.0;
    double consistency_stderr = 0.0;
    std::size_t n_trajectories = 0;

    /// <exp(-Q)> - (1 - mu_hat).
    double ft_residual() const {
        return mean_exp_neg_q - (1.0 - mu_hat);
    }
    /// Standard error of ft_residual from the paired per-trajectory sums.
    double ft_residual_stderr() const {
        return consistency_stderr;
    }
    /// Standard error of mean_q - bound.
    double jensen_stderr() const;

    bool operator==(const FtEstimate &) const = default;
};

/// Draws the initial state of a trajectory from the trajectory's own stream.
using InitialStateSampler = std::function<PureQubitState(Rng &)>;

InitialStateSampler point_mass(const PureQubitState &x0);
/// z0 uniform on [-1, 1] on the y = 0 great circle (x >= 0 half).
InitialStateSampler uniform_z_on_xz_circle();
/// Haar-random pure states.
InitialStateSampler uniform_on_sphere();

struct EnsembleOptions {
    /// Number of worker threads; results do not depend on it.
    std::size_t workers = 1;
};

/// Per-trajectory samples of an M-trajectory ensemble, indexed by trajectory.
/// Trajectory i runs on Rng(derive_seed(master_seed, i)).
std::vector<ArrowOfTimeSample> sample_ensemble(const MeasurementScheme &scheme, const InitialStateSampler &initial,
                                               std::size_t steps, std::size_t trajectories, uint64_t master_seed,
                                               EnsembleOptions options = {});

/// Aggregates samples with a fixed pairwise reduction tree.
FtEstimate summarize(std::span<const ArrowOfTimeSample> samples);

/// Throws DomainError if trajectories < 100.
FtEstimate estimate_ft(const MeasurementScheme &scheme, const PureQubitState &x0, std::size_t steps,
                       std::size_t trajectories, uint64_t master_seed, EnsembleOptions options = {});

FtEstimate estimate_ft_mixed_initial(const MeasurementScheme &scheme, const InitialStateSampler &initial,
                                     std::size_t steps, std::size_t trajectories, uint64_t master_seed,
                                     EnsembleOptions options = {});

/// mu = integral dr |<x0bar|E(r)|x0>|^2 / <x0|E(r)|x0> for a single step, by
/// exact enumeration (two-outcome) or adaptive quadrature over the readout
/// plane to absolute tolerance 1e-8. Throws NumericError if the quadrature
/// does not reach it.
double mu_quadrature_single_step(const MeasurementScheme &scheme, const PureQubitState &x0);

/// Uniform-bin histogram, density normalized.
struct Histogram {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<std::size_t> counts;
    std::vector<double> density;

    std::size_t bins() const {
        return counts.size();
    }
    double width() const {
        return (hi - lo) / static_cast<double>(counts.size());
    }
    double left_edge(std::size_t i) const;
    double right_edge(std::size_t i) const;
};

/// Histogram on [min, max] of the values, widened by 1% of the span on each
/// side. Throws DomainError for bins < 10 or no values.
Histogram make_histogram(std::span<const double> values, std::size_t bins);

/// Histogram with an explicit range; values outside [lo, hi) are dropped
/// from the counts but still included in the normalization.
Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

/// Density-normalized histogram of Q over an ensemble.
Histogram q_histogram(const MeasurementScheme &scheme, const PureQubitState &x0, std::size_t steps,
                      std::size_t trajectories, std::size_t bins, uint64_t master_seed, EnsembleOptions options = {});

}  // namespace qarrow

#endif
