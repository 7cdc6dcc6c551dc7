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

#ifndef QARROW_SCHEMES_H
#define QARROW_SCHEMES_H

#include <string>
#include <string_view>

#include "qarrow/qmath.h"
#include "qarrow/random.h"

namespace qarrow {

enum class SchemeKind { TwoOutcome, Dispersive, Homodyne, Heterodyne };

std::string_view scheme_name(SchemeKind kind);

/// Parses "two-outcome", "dispersive", "homodyne" or "heterodyne".
SchemeKind parse_scheme_kind(std::string_view name);

/// A measurement family and its per-step parameters, plus an optional Rabi
/// drive H = Omega sigma_y / 2 applied after each measurement.
///
/// Only the parameters relevant to `kind` are read: `k` for TwoOutcome,
/// `tau` for Dispersive, `gamma` for the fluorescence schemes.
struct MeasurementScheme {
    SchemeKind kind = SchemeKind::Dispersive;
    double k = 0.5;
    double tau = 1.0;
    double gamma = 1.0;
    double dt = 0.01;
    double omega = 0.0;

    static MeasurementScheme two_outcome(double k, double omega = 0.0, double dt = 1.0);
    static MeasurementScheme dispersive(double tau, double dt, double omega = 0.0);
    static MeasurementScheme homodyne(double gamma, double dt, double omega = 0.0);
    static MeasurementScheme heterodyne(double gamma, double dt, double omega = 0.0);

    /// gamma * dt for the fluorescence schemes.
    double epsilon() const {
        return gamma * dt;
    }

    /// Throws DomainError unless k in [0, 1/2], tau > 0, gamma >= 0, dt > 0
    /// and epsilon in [0, 1).
    void validate() const;

    bool operator==(const MeasurementScheme &) const = default;
};

enum class ReadoutKind { Binary, Real, Complex };

/// A single measurement outcome. Heterodyne readouts are r = I - iQ.
class Readout {
   public:
    static Readout binary(int sign);
    static Readout real(double r);
    static Readout complex(cplx r);

    ReadoutKind kind() const {
        return kind_;
    }
    cplx value() const {
        return value_;
    }
    double re() const {
        return value_.real();
    }
    double im() const {
        return value_.imag();
    }
    int sign() const {
        return value_.real() > 0 ? 1 : -1;
    }

    bool operator==(const Readout &) const = default;

   private:
    Readout(ReadoutKind kind, cplx value) : kind_(kind), value_(value) {
    }

    ReadoutKind kind_ = ReadoutKind::Binary;
    cplx value_{1.0};
};

ReadoutKind readout_kind_for(SchemeKind kind);

/// Kraus operator M(r) including its scalar prefactor, which is carried in
/// the log scale:
///   TwoOutcome  M(+1) = diag(sqrt(1-k), sqrt(k)),  M(-1) = diag(sqrt(k), sqrt(1-k))
///   Dispersive  M(r)  = (dt / 2 pi tau)^(1/4) exp(-(dt / 4 tau) (r - sigma_z)^2)
///   Homodyne    M(r)  = exp(-r^2/2) / pi^(1/4) [[sqrt(1-eps/2), 0], [sqrt(eps) r, 1]]
///   Heterodyne  M(r)  = exp(-|r|^2/2) / sqrt(pi) [[sqrt(1-eps), 0], [sqrt(eps) conj(r), 1]]
/// Throws DomainError if the readout kind does not match the scheme.
LogScaledMatrix kraus_forward(const MeasurementScheme &scheme, const Readout &r);

/// Time-reversed Kraus operator theta^-1 M^dagger theta = adjugate(M).
/// Throws SingularOperatorError when M(r) is not invertible.
LogScaledMatrix kraus_backward(const MeasurementScheme &scheme, const Readout &r);

/// exp(-i omega dt sigma_y / 2).
Complex2x2 rabi_unitary(double omega, double dt);

/// Probability mass (Binary) or density per unit readout (Real; Complex per
/// dI dQ) of obtaining r from state x: |M(r) x|^2.
double readout_pdf(const MeasurementScheme &scheme, const PureQubitState &x, const Readout &r);

/// Draws a readout from exactly readout_pdf(scheme, x, .). Continuous
/// readouts use closed-form CDF inversion; throws NumericError if the
/// inversion fails to converge.
Readout sample_readout(const MeasurementScheme &scheme, const PureQubitState &x, Rng &rng);

}  // namespace qarrow

#endif
