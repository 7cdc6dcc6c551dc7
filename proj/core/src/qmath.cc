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

#include "qarrow/qmath.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qarrow/errors.h"

namespace qarrow {

double Complex2x2::max_abs() const {
    return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
}

bool Complex2x2::is_finite() const {
    for (cplx c : {a11, a12, a21, a22}) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            return false;
        }
    }
    return true;
}

std::string Complex2x2::str() const {
    std::ostringstream out;
    out << "[[" << a11 << ", " << a12 << "], [" << a21 << ", " << a22 << "]]";
    return out.str();
}

LogScaledMatrix::LogScaledMatrix(const Complex2x2 &mat, double log_scale) : mat_(mat), log_scale_(log_scale) {
    normalize();
}

void LogScaledMatrix::normalize() {
    double m = mat_.max_abs();
    if (m == 0.0 || !std::isfinite(m)) {
        return;
    }
    int e;
    std::frexp(m, &e);
    if (e == 0) {
        return;
    }
    // Power-of-two rescaling is exact.
    double f = std::ldexp(1.0, -e);
    mat_ = cplx{f} * mat_;
    log_scale_ += e * std::numbers::ln2;
}

Complex2x2 LogScaledMatrix::value() const {
    return cplx{std::exp(log_scale_)} * mat_;
}

void LogScaledMatrix::left_multiply(const LogScaledMatrix &lhs) {
    mat_ = lhs.mat_ * mat_;
    log_scale_ += lhs.log_scale_;
    normalize();
}

void LogScaledMatrix::left_multiply(const Complex2x2 &lhs) {
    mat_ = lhs * mat_;
    normalize();
}

LogScaledMatrix adjugate(const LogScaledMatrix &m) {
    return LogScaledMatrix(adjugate(m.mat()), m.log_scale());
}

cplx det_log(const LogScaledMatrix &m) {
    cplx d = m.mat().det();
    if (d == cplx{0.0}) {
        throw SingularOperatorError("det_log: singular matrix " + m.mat().str());
    }
    return std::log(d) + 2.0 * m.log_scale();
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

double bloch_distance(const BlochVector &a, const BlochVector &b) {
    return BlochVector{a.x - b.x, a.y - b.y, a.z - b.z}.norm();
}

PureQubitState::PureQubitState(cplx amp_e, cplx amp_g) {
    double n = std::hypot(std::abs(amp_e), std::abs(amp_g));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("PureQubitState: amplitudes must be finite and not both zero");
    }
    amp_e_ = amp_e / n;
    amp_g_ = amp_g / n;
}

PureQubitState PureQubitState::plus_x() {
    return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
}

cplx inner(const PureQubitState &bra, const PureQubitState &ket) {
    return std::conj(bra.amp_e()) * ket.amp_e() + std::conj(bra.amp_g()) * ket.amp_g();
}

BlochVector bloch_from_state(const PureQubitState &s) {
    cplx coherence = std::conj(s.amp_e()) * s.amp_g();
    return {
        2.0 * coherence.real(),
        2.0 * coherence.imag(),
        std::norm(s.amp_e()) - std::norm(s.amp_g()),
    };
}

PureQubitState state_from_bloch(const BlochVector &v) {
    double n = v.norm();
    if (!(std::abs(n - 1.0) <= 1e-9)) {
        std::ostringstream msg;
        msg << "state_from_bloch: Bloch vector norm " << n << " is not 1";
        throw DomainError(msg.str());
    }
    // cos(theta/2) and sin(theta/2) computed without acos to keep the poles exact.
    double ce = std::sqrt(std::max(0.0, (1.0 + v.z / n) / 2.0));
    double sg = std::sqrt(std::max(0.0, (1.0 - v.z / n) / 2.0));
    double rho = std::hypot(v.x, v.y);
    cplx phase = rho > 0.0 ? cplx{v.x / rho, v.y / rho} : cplx{1.0};
    return {ce, sg * phase};
}

PureQubitState orthogonal_state(const PureQubitState &s) {
    return {-std::conj(s.amp_g()), std::conj(s.amp_e())};
}

Complex2x2 basis_change(const PureQubitState &s) {
    return {s.amp_e(), -std::conj(s.amp_g()), s.amp_g(), std::conj(s.amp_e())};
}

}  // namespace qarrow
