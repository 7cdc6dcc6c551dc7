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

#include "qarrow/schemes.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qarrow/errors.h"
#include "quadratic_gaussian.h"

namespace qarrow {

namespace {

constexpr double kLogPi = 1.1447298858494002;  // log(pi)

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw DomainError("MeasurementScheme: " + what);
    }
}

void check_readout(const MeasurementScheme &scheme, const Readout &r) {
    if (r.kind() != readout_kind_for(scheme.kind)) {
        throw DomainError(
            "readout kind does not match the " + std::string(scheme_name(scheme.kind)) + " scheme");
    }
}

// Coefficients (a0, a1, a2) of the fluorescence readout density
// exp(-r^2)/sqrt(pi) [(1 - eps/2)|e|^2 + |g + sqrt(eps) e r|^2]. For heterodyne
// this is also the marginal density of the in-phase quadrature I.
detail::QuadraticGaussian fluorescence_marginal(double eps, const PureQubitState &x) {
    cplx e = x.amp_e();
    cplx g = x.amp_g();
    double pe = std::norm(e);
    return {
        (1.0 - 0.5 * eps) * pe + std::norm(g),
        2.0 * std::sqrt(eps) * (std::conj(g) * e).real(),
        eps * pe,
    };
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::TwoOutcome:
            return "two-outcome";
        case SchemeKind::Dispersive:
            return "dispersive";
        case SchemeKind::Homodyne:
            return "homodyne";
        case SchemeKind::Heterodyne:
            return "heterodyne";
    }
    return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view name) {
    for (SchemeKind k : {SchemeKind::TwoOutcome, SchemeKind::Dispersive, SchemeKind::Homodyne,
                         SchemeKind::Heterodyne}) {
        if (scheme_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown measurement scheme '" + std::string(name) + "'");
}

MeasurementScheme MeasurementScheme::two_outcome(double k, double omega, double dt) {
    MeasurementScheme s{SchemeKind::TwoOutcome, k, 1.0, 0.0, dt, omega};
    s.validate();
    return s;
}

MeasurementScheme MeasurementScheme::dispersive(double tau, double dt, double omega) {
    MeasurementScheme s{SchemeKind::Dispersive, 0.5, tau, 0.0, dt, omega};
    s.validate();
    return s;
}

MeasurementScheme MeasurementScheme::homodyne(double gamma, double dt, double omega) {
    MeasurementScheme s{SchemeKind::Homodyne, 0.5, 1.0, gamma, dt, omega};
    s.validate();
    return s;
}

MeasurementScheme MeasurementScheme::heterodyne(double gamma, double dt, double omega) {
    MeasurementScheme s{SchemeKind::Heterodyne, 0.5, 1.0, gamma, dt, omega};
    s.validate();
    return s;
}

void MeasurementScheme::validate() const {
    require(std::isfinite(dt) && dt > 0.0, "dt must be positive");
    require(std::isfinite(omega), "omega must be finite");
    switch (kind) {
        case SchemeKind::TwoOutcome:
            require(k >= 0.0 && k <= 0.5, "k must lie in [0, 1/2]");
            break;
        case SchemeKind::Dispersive:
            require(std::isfinite(tau) && tau > 0.0, "tau must be positive");
            break;
        case SchemeKind::Homodyne:
        case SchemeKind::Heterodyne:
            require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be non-negative");
            require(epsilon() < 1.0, "epsilon = gamma * dt must lie in [0, 1)");
            break;
    }
}

Readout Readout::binary(int sign) {
    if (sign != 1 && sign != -1) {
        throw DomainError("binary readout must be +1 or -1");
    }
    return {ReadoutKind::Binary, cplx{static_cast<double>(sign)}};
}

Readout Readout::real(double r) {
    if (!std::isfinite(r)) {
        throw DomainError("real readout must be finite");
    }
    return {ReadoutKind::Real, cplx{r}};
}

Readout Readout::complex(cplx r) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
        throw DomainError("complex readout must be finite");
    }
    return {ReadoutKind::Complex, r};
}

ReadoutKind readout_kind_for(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::TwoOutcome:
            return ReadoutKind::Binary;
        case SchemeKind::Dispersive:
        case SchemeKind::Homodyne:
            return ReadoutKind::Real;
        case SchemeKind::Heterodyne:
            return ReadoutKind::Complex;
    }
    return ReadoutKind::Real;
}

LogScaledMatrix kraus_forward(const MeasurementScheme &scheme, const Readout &r) {
    check_readout(scheme, r);
    switch (scheme.kind) {
        case SchemeKind::TwoOutcome: {
            double strong = std::sqrt(1.0 - scheme.k);
            double weak = std::sqrt(scheme.k);
            return r.sign() > 0 ? LogScaledMatrix(Complex2x2::diag(strong, weak))
                                : LogScaledMatrix(Complex2x2::diag(weak, strong));
        }
        case SchemeKind::Dispersive: {
            // exp(-(dt/4tau)(r -+ 1)^2) = exp(-(dt/4tau)(r^2 + 1)) exp(+-(dt/2tau) r); the
            // larger of the two diagonal entries is pulled into the scale.
            double rate = scheme.dt / scheme.tau;
            double x = r.re();
            double log_scale = 0.25 * std::log(rate / (2.0 * std::numbers::pi)) - 0.25 * rate * (x * x + 1.0) +
                               0.5 * rate * std::abs(x);
            double small = std::exp(-rate * std::abs(x));
            return x >= 0.0 ? LogScaledMatrix(Complex2x2::diag(1.0, small), log_scale)
                            : LogScaledMatrix(Complex2x2::diag(small, 1.0), log_scale);
        }
        case SchemeKind::Homodyne: {
            double eps = scheme.epsilon();
            double x = r.re();
            return LogScaledMatrix({std::sqrt(1.0 - 0.5 * eps), 0.0, std::sqrt(eps) * x, 1.0},
                                   -0.5 * x * x - 0.25 * kLogPi);
        }
        case SchemeKind::Heterodyne: {
            double eps = scheme.epsilon();
            cplx x = r.value();
            return LogScaledMatrix({std::sqrt(1.0 - eps), 0.0, std::sqrt(eps) * std::conj(x), 1.0},
                                   -0.5 * std::norm(x) - 0.5 * kLogPi);
        }
    }
    throw DomainError("kraus_forward: unknown scheme");
}

LogScaledMatrix kraus_backward(const MeasurementScheme &scheme, const Readout &r) {
    LogScaledMatrix m = kraus_forward(scheme, r);
    if (m.mat().det() == cplx{0.0}) {
        throw SingularOperatorError("kraus_backward: forward Kraus operator of the " +
                                    std::string(scheme_name(scheme.kind)) + " scheme is singular");
    }
    return adjugate(m);
}

Complex2x2 rabi_unitary(double omega, double dt) {
    double half = 0.5 * omega * dt;
    double c = std::cos(half);
    double s = std::sin(half);
    return {c, -s, s, c};
}

double readout_pdf(const MeasurementScheme &scheme, const PureQubitState &x, const Readout &r) {
    LogScaledMatrix m = kraus_forward(scheme, r);
    const Complex2x2 &a = m.mat();
    cplx e = a.a11 * x.amp_e() + a.a12 * x.amp_g();
    cplx g = a.a21 * x.amp_e() + a.a22 * x.amp_g();
    return std::exp(2.0 * m.log_scale()) * (std::norm(e) + std::norm(g));
}

Readout sample_readout(const MeasurementScheme &scheme, const PureQubitState &x, Rng &rng) {
    switch (scheme.kind) {
        case SchemeKind::TwoOutcome: {
            double p_plus = (1.0 - scheme.k) * std::norm(x.amp_e()) + scheme.k * std::norm(x.amp_g());
            return Readout::binary(uniform_open01(rng) < p_plus ? 1 : -1);
        }
        case SchemeKind::Dispersive: {
            // Exact two-Gaussian mixture: Born branch, then N(+-1, tau/dt).
            double center = uniform_open01(rng) < std::norm(x.amp_e()) ? 1.0 : -1.0;
            return Readout::real(center + std::sqrt(scheme.tau / scheme.dt) * standard_normal(rng));
        }
        case SchemeKind::Homodyne: {
            auto density = fluorescence_marginal(scheme.epsilon(), x);
            return Readout::real(density.quantile(uniform_open01(rng)));
        }
        case SchemeKind::Heterodyne: {
            double eps = scheme.epsilon();
            // r* = I + iQ. Draw I from its marginal, then Q | I; both are
            // quadratic-Gaussian.
            double in_phase = fluorescence_marginal(eps, x).quantile(uniform_open01(rng));
            cplx w = std::sqrt(eps) * x.amp_e() * in_phase + x.amp_g();
            cplx v = cplx{0.0, std::sqrt(eps)} * x.amp_e();
            detail::QuadraticGaussian conditional{
                (1.0 - eps) * std::norm(x.amp_e()) + std::norm(w),
                2.0 * (std::conj(w) * v).real(),
                std::norm(v),
            };
            double quadrature = conditional.quantile(uniform_open01(rng));
            return Readout::complex({in_phase, -quadrature});
        }
    }
    throw DomainError("sample_readout: unknown scheme");
}

}  // namespace qarrow
