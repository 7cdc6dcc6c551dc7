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

#ifndef QARROW_QMATH_H
#define QARROW_QMATH_H

#include <array>
#include <complex>
#include <string>

namespace qarrow {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row major.
struct Complex2x2 {
    cplx a11{1.0};
    cplx a12{0.0};
    cplx a21{0.0};
    cplx a22{1.0};

    static constexpr Complex2x2 identity() {
        return {};
    }
    static constexpr Complex2x2 diag(cplx d1, cplx d2) {
        return {d1, 0.0, 0.0, d2};
    }

    cplx det() const {
        return a11 * a22 - a12 * a21;
    }
    cplx trace() const {
        return a11 + a22;
    }
    Complex2x2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }
    double max_abs() const;
    bool is_finite() const;

    friend Complex2x2 operator*(const Complex2x2 &a, const Complex2x2 &b) {
        return {
            a.a11 * b.a11 + a.a12 * b.a21,
            a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21,
            a.a21 * b.a12 + a.a22 * b.a22,
        };
    }
    friend Complex2x2 operator*(cplx s, const Complex2x2 &m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }
    friend Complex2x2 operator+(const Complex2x2 &a, const Complex2x2 &b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Complex2x2 operator-(const Complex2x2 &a, const Complex2x2 &b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    bool operator==(const Complex2x2 &) const = default;

    std::string str() const;
};

/// Classical adjugate [[a22, -a12], [-a21, a11]].
///
/// For a spin-1/2 the time-reversal operator is theta = -i sigma_y K, and
/// theta^-1 M^dagger theta = sigma_y M^T sigma_y, which is exactly the
/// adjugate. Hence adjugate(M) * M = det(M) * I is the reversal identity.
constexpr Complex2x2 adjugate(const Complex2x2 &m) {
    return {m.a22, -m.a12, -m.a21, m.a11};
}

/// A matrix stored as exp(log_scale) * mat with max|mat entry| in [0.5, 1).
///
/// Products of thousands of Kraus operators carry Gaussian prefactors that
/// leave the double range; the scale absorbs them.
class LogScaledMatrix {
   public:
    LogScaledMatrix() = default;
    explicit LogScaledMatrix(const Complex2x2 &mat, double log_scale = 0.0);

    static LogScaledMatrix identity() {
        return LogScaledMatrix(Complex2x2::identity());
    }

    const Complex2x2 &mat() const {
        return mat_;
    }
    double log_scale() const {
        return log_scale_;
    }

    /// The represented value. Under/overflows for extreme scales.
    Complex2x2 value() const;

    /// Replaces *this by lhs * (*this).
    void left_multiply(const LogScaledMatrix &lhs);
    void left_multiply(const Complex2x2 &lhs);

    LogScaledMatrix adjoint() const {
        return LogScaledMatrix(mat_.adjoint(), log_scale_);
    }

    friend LogScaledMatrix operator*(const LogScaledMatrix &a, const LogScaledMatrix &b) {
        return LogScaledMatrix(a.mat_ * b.mat_, a.log_scale_ + b.log_scale_);
    }

   private:
    void normalize();

    Complex2x2 mat_{};
    double log_scale_ = 0.0;
};

LogScaledMatrix adjugate(const LogScaledMatrix &m);

/// Complex log-determinant 2 * log_scale + log det(mat). Throws
/// SingularOperatorError when det(mat) == 0.
cplx det_log(const LogScaledMatrix &m);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double norm() const;
    bool operator==(const BlochVector &) const = default;
};

double bloch_distance(const BlochVector &a, const BlochVector &b);

/// Pure qubit state amp_e |e> + amp_g |g>. Global phase is not tracked.
class PureQubitState {
   public:
    /// |e>, the +z pole.
    PureQubitState() = default;

    /// Normalizes its input. Throws DomainError on a zero or non-finite vector.
    PureQubitState(cplx amp_e, cplx amp_g);

    static PureQubitState excited() {
        return {1.0, 0.0};
    }
    static PureQubitState ground() {
        return {0.0, 1.0};
    }
    /// Eigenstate of sigma_x with eigenvalue +1.
    static PureQubitState plus_x();

    cplx amp_e() const {
        return amp_e_;
    }
    cplx amp_g() const {
        return amp_g_;
    }
    std::array<cplx, 2> amplitudes() const {
        return {amp_e_, amp_g_};
    }

   private:
    cplx amp_e_{1.0};
    cplx amp_g_{0.0};
};

cplx inner(const PureQubitState &bra, const PureQubitState &ket);

BlochVector bloch_from_state(const PureQubitState &s);

/// Inverse of bloch_from_state up to global phase. Throws DomainError unless
/// |v| = 1 within 1e-9.
PureQubitState state_from_bloch(const BlochVector &v);

/// The normalized state orthogonal to s.
PureQubitState orthogonal_state(const PureQubitState &s);

/// Unitary whose columns are s and orthogonal_state(s).
Complex2x2 basis_change(const PureQubitState &s);

}  // namespace qarrow

#endif
