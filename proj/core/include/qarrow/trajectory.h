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

#ifndef QARROW_TRAJECTORY_H
#define QARROW_TRAJECTORY_H

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qarrow/qmath.h"
#include "qarrow/random.h"
#include "qarrow/schemes.h"

namespace qarrow {

/// Matrix elements of the effect E(r) = M(r)^dagger M(r) in the basis
/// {|x0>, |x0bar>}, kept as a common log scale times mantissas so that long
/// records do not underflow: a = exp(log_scale) * a_rel, and so on.
struct EffectElements {
    double log_scale = 0.0;
    double a_rel = 1.0;  // <x0|E|x0>
    double b_rel = 1.0;  // <x0bar|E|x0bar>
    cplx c_rel{0.0};     // <x0bar|E|x0>
};

/// One forward realization: initial state, readout record and the global
/// Kraus operator of the whole record.
///
/// The global operator is stored already rotated into the {|x0>, |x0bar>}
/// basis, i.e. kraus_in_x0_basis = M(r) W with W = [x0, x0bar]. Its first
/// column is proportional to the final state. log|det M(r)| is accumulated
/// step by step rather than recomputed from the (possibly near rank-1) product.
struct Trajectory {
    MeasurementScheme scheme;
    PureQubitState x0;
    std::size_t steps = 0;

    /// r_0 ... r_{N-1}; empty unless the path was recorded.
    std::vector<Readout> record;
    /// x_0 ... x_N; empty unless the path was recorded.
    std::vector<PureQubitState> states;
    /// log P_F after each step; empty unless the path was recorded.
    std::vector<double> running_log_pf;

    /// sum_k log P_F(r_k | x_k).
    double log_pf = 0.0;
    LogScaledMatrix kraus_in_x0_basis;
    double log_abs_det_kraus = 0.0;

    bool has_path() const {
        return states.size() == steps + 1;
    }
    PureQubitState final_state() const;
    EffectElements effect_elements() const;
    /// E(r) in the {|x0>, |x0bar>} basis.
    LogScaledMatrix effect() const;
};

/// Arrow-of-time measure Q = log(P_F / P_B^AC) of a single trajectory and its
/// absolute-irreversibility weight lambda = |c|^2 / a^2.
struct ArrowOfTimeSample {
    double q = 0.0;
    double lambda = 0.0;
    double exp_neg_q = 1.0;
};

/// One Bayesian update: U M(r) x / |U M(r) x|. Throws ImpossibleRecordError
/// if the unnormalized norm falls below 1e-300.
PureQubitState forward_step(const PureQubitState &x, const MeasurementScheme &scheme, const Readout &r);

struct SimulationOptions {
    /// Keep record, states and running log P_F. Ensemble estimators leave this
    /// off and run in O(1) memory per trajectory.
    bool record_path = true;
};

/// Samples an N-step forward trajectory with exact per-step readout draws.
Trajectory simulate_forward(const PureQubitState &x0, const MeasurementScheme &scheme, std::size_t steps, Rng &rng,
                            SimulationOptions options = {});

/// Replays a given record from x0 (no sampling). Throws
/// ImpossibleRecordError for zero-probability records.
Trajectory trajectory_from_record(const PureQubitState &x0, const MeasurementScheme &scheme,
                                  const std::vector<Readout> &record);

/// Q = 2 log <x0|E|x0> - log det E, lambda = |<x0bar|E|x0>|^2 / <x0|E|x0>^2.
/// Throws SingularOperatorError when E is singular.
ArrowOfTimeSample arrow_of_time(const Trajectory &t);

struct BackwardReplay {
    /// x_N, x_{N-1}, ..., x_0 as produced by the backward Kraus operators.
    std::vector<PureQubitState> states;
    /// sum_k log P_B(r_k | x_{k+1}).
    double log_pb = 0.0;
};

/// Applies adjugate(M(r_k)) U^dagger from the final state down to k = 0.
/// Requires a recorded path. Throws SingularOperatorError for singular steps.
BackwardReplay backward_replay(const Trajectory &t);

/// Closed form log[(r + z0 - 2 k z0)^2 / (4 k (1 - k))] for the two-outcome
/// measurement. Throws DomainError for k = 0 (the strong measurement cannot
/// be reversed) and for r not in {+1, -1}.
double q_two_outcome(double k, double z0, int r);

/// step,r_re,r_im,x,y,z,logPF with one row per readout r_n; x, y, z is the
/// Bloch vector of the post-measurement state x_{n+1}.
void write_trajectory_csv(std::ostream &out, const Trajectory &t);

}  // namespace qarrow

#endif
