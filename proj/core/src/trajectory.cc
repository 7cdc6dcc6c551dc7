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

#include "qarrow/trajectory.h"

#include <cmath>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "qarrow/errors.h"

namespace qarrow {

namespace {

constexpr double kImpossibleNorm = 1e-300;

/// Advances the state and the global Kraus operator one readout at a time.
class Stepper {
   public:
    Stepper(const MeasurementScheme &scheme, const PureQubitState &x0)
        : scheme_(scheme), state_(x0), kraus_(basis_change(x0)) {
        if (scheme.omega != 0.0) {
            drive_ = rabi_unitary(scheme.omega, scheme.dt);
        }
    }

    /// Returns log P_F(r | current state).
    double step(const Readout &r) {
        LogScaledMatrix m = kraus_forward(scheme_, r);
        const Complex2x2 &a = m.mat();
        cplx e = a.a11 * state_.amp_e() + a.a12 * state_.amp_g();
        cplx g = a.a21 * state_.amp_e() + a.a22 * state_.amp_g();
        double n2 = std::norm(e) + std::norm(g);
        if (!(std::sqrt(n2) >= kImpossibleNorm)) {
            throw ImpossibleRecordError("readout has zero probability from the current state");
        }
        if (drive_) {
            const Complex2x2 &u = *drive_;
            cplx e2 = u.a11 * e + u.a12 * g;
            g = u.a21 * e + u.a22 * g;
            e = e2;
        }
        state_ = PureQubitState(e, g);

        kraus_.left_multiply(m);
        if (drive_) {
            kraus_.left_multiply(*drive_);
        }
        double det = std::abs(a.det());
        log_abs_det_ += det > 0.0 ? 2.0 * m.log_scale() + std::log(det) : -std::numeric_limits<double>::infinity();
        return 2.0 * m.log_scale() + std::log(n2);
    }

    const PureQubitState &state() const {
        return state_;
    }
    const LogScaledMatrix &kraus() const {
        return kraus_;
    }
    double log_abs_det() const {
        return log_abs_det_;
    }

   private:
    MeasurementScheme scheme_;
    std::optional<Complex2x2> drive_;
    PureQubitState state_;
    LogScaledMatrix kraus_;
    double log_abs_det_ = 0.0;
};

Trajectory begin_trajectory(const PureQubitState &x0, const MeasurementScheme &scheme, std::size_t steps,
                            bool record_path) {
    Trajectory t;
    t.scheme = scheme;
    t.x0 = x0;
    t.steps = steps;
    if (record_path) {
        t.record.reserve(steps);
        t.states.reserve(steps + 1);
        t.running_log_pf.reserve(steps);
        t.states.push_back(x0);
    }
    return t;
}

void finish_trajectory(Trajectory &t, const Stepper &stepper) {
    t.kraus_in_x0_basis = stepper.kraus();
    t.log_abs_det_kraus = stepper.log_abs_det();
}

}  // namespace

PureQubitState Trajectory::final_state() const {
    if (!states.empty()) {
        return states.back();
    }
    const Complex2x2 &m = kraus_in_x0_basis.mat();
    return {m.a11, m.a21};
}

EffectElements Trajectory::effect_elements() const {
    const Complex2x2 &m = kraus_in_x0_basis.mat();
    return {
        2.0 * kraus_in_x0_basis.log_scale(),
        std::norm(m.a11) + std::norm(m.a21),
        std::norm(m.a12) + std::norm(m.a22),
        std::conj(m.a12) * m.a11 + std::conj(m.a22) * m.a21,
    };
}

LogScaledMatrix Trajectory::effect() const {
    const Complex2x2 &m = kraus_in_x0_basis.mat();
    return LogScaledMatrix(m.adjoint() * m, 2.0 * kraus_in_x0_basis.log_scale());
}

PureQubitState forward_step(const PureQubitState &x, const MeasurementScheme &scheme, const Readout &r) {
    Stepper stepper(scheme, x);
    stepper.step(r);
    return stepper.state();
}

Trajectory simulate_forward(const PureQubitState &x0, const MeasurementScheme &scheme, std::size_t steps, Rng &rng,
                            SimulationOptions options) {
    if (steps == 0) {
        throw DomainError("simulate_forward: at least one step is required");
    }
    Trajectory t = begin_trajectory(x0, scheme, steps, options.record_path);
    Stepper stepper(scheme, x0);
    for (std::size_t n = 0; n < steps; ++n) {
        Readout r = sample_readout(scheme, stepper.state(), rng);
        t.log_pf += stepper.step(r);
        if (options.record_path) {
            t.record.push_back(r);
            t.states.push_back(stepper.state());
            t.running_log_pf.push_back(t.log_pf);
        }
    }
    finish_trajectory(t, stepper);
    return t;
}

Trajectory trajectory_from_record(const PureQubitState &x0, const MeasurementScheme &scheme,
                                  const std::vector<Readout> &record) {
    Trajectory t = begin_trajectory(x0, scheme, record.size(), true);
    Stepper stepper(scheme, x0);
    for (const Readout &r : record) {
        t.log_pf += stepper.step(r);
        t.record.push_back(r);
        t.states.push_back(stepper.state());
        t.running_log_pf.push_back(t.log_pf);
    }
    finish_trajectory(t, stepper);
    return t;
}

ArrowOfTimeSample arrow_of_time(const Trajectory &t) {
    if (!std::isfinite(t.log_abs_det_kraus)) {
        throw SingularOperatorError("arrow_of_time: the effect matrix of the record is singular");
    }
    EffectElements el = t.effect_elements();
    ArrowOfTimeSample s;
    // Q = 2 log a - log det E with det E = |det M|^2.
    s.q = 2.0 * (el.log_scale + std::log(el.a_rel)) - 2.0 * t.log_abs_det_kraus;
    s.lambda = std::norm(el.c_rel) / (el.a_rel * el.a_rel);
    s.exp_neg_q = std::exp(-s.q);
    return s;
}

BackwardReplay backward_replay(const Trajectory &t) {
    if (!t.has_path()) {
        throw DomainError("backward_replay: trajectory was simulated without recording its path");
    }
    std::optional<Complex2x2> undrive;
    if (t.scheme.omega != 0.0) {
        undrive = rabi_unitary(t.scheme.omega, t.scheme.dt).adjoint();
    }
    BackwardReplay out;
    out.states.reserve(t.steps + 1);
    PureQubitState x = t.states.back();
    out.states.push_back(x);
    for (std::size_t n = t.steps; n-- > 0;) {
        cplx e = x.amp_e();
        cplx g = x.amp_g();
        if (undrive) {
            const Complex2x2 &u = *undrive;
            cplx e2 = u.a11 * e + u.a12 * g;
            g = u.a21 * e + u.a22 * g;
            e = e2;
        }
        LogScaledMatrix m = kraus_backward(t.scheme, t.record[n]);
        const Complex2x2 &a = m.mat();
        cplx be = a.a11 * e + a.a12 * g;
        cplx bg = a.a21 * e + a.a22 * g;
        double n2 = std::norm(be) + std::norm(bg);
        if (!(std::sqrt(n2) >= kImpossibleNorm)) {
            throw ImpossibleRecordError("backward_replay: zero backward probability");
        }
        out.log_pb += 2.0 * m.log_scale() + std::log(n2);
        x = PureQubitState(be, bg);
        out.states.push_back(x);
    }
    return out;
}

double q_two_outcome(double k, double z0, int r) {
    if (r != 1 && r != -1) {
        throw DomainError("q_two_outcome: r must be +1 or -1");
    }
    if (!(k > 0.0 && k <= 0.5)) {
        throw DomainError("q_two_outcome: Q diverges unless k lies in (0, 1/2]");
    }
    double num = r + z0 - 2.0 * k * z0;
    return std::log(num * num / (4.0 * k * (1.0 - k)));
}

void write_trajectory_csv(std::ostream &out, const Trajectory &t) {
    if (!t.has_path()) {
        throw DomainError("write_trajectory_csv: trajectory was simulated without recording its path");
    }
    out << "step,r_re,r_im,x,y,z,logPF\n";
    std::ostringstream row;
    row << std::setprecision(17);
    for (std::size_t n = 0; n < t.steps; ++n) {
        BlochVector b = bloch_from_state(t.states[n + 1]);
        row.str("");
        row << n << ',' << t.record[n].re() << ',' << t.record[n].im() << ',' << b.x << ',' << b.y << ',' << b.z
            << ',' << t.running_log_pf[n] << '\n';
        out << row.str();
    }
}

}  // namespace qarrow
