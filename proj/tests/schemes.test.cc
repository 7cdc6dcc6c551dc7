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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gtest/gtest.h"

#include "qarrow/errors.h"
#include "test_util.h"

using namespace qarrow;

namespace {

std::vector<MeasurementScheme> all_schemes() {
    return {
        MeasurementScheme::two_outcome(0.2),
        MeasurementScheme::dispersive(1.0, 0.01),
        MeasurementScheme::dispersive(1.0, 1.0),
        MeasurementScheme::homodyne(1.0, 0.01),
        MeasurementScheme::homodyne(1.0, 0.6),
        MeasurementScheme::heterodyne(1.0, 0.01),
        MeasurementScheme::heterodyne(1.0, 0.6),
    };
}

// Integral of f over the readout space of `scheme` (sum for binary readouts).
template <typename F>
auto integrate_readouts(const MeasurementScheme &s, const F &f) {
    using R = decltype(f(Readout::binary(1)));
    if (s.kind == SchemeKind::TwoOutcome) {
        return R(f(Readout::binary(1)) + f(Readout::binary(-1)));
    }
    auto nodes = testutil::gauss_hermite(96);
    double width = s.kind == SchemeKind::Dispersive ? std::sqrt(2.0 * s.tau / s.dt) : 1.0;
    R total = 0.0 * R{};
    for (auto [x, w] : nodes) {
        double wx = w * std::exp(x * x) * width;
        if (s.kind == SchemeKind::Heterodyne) {
            for (auto [y, v] : nodes) {
                total = total + (wx * v * std::exp(y * y)) * f(Readout::complex({width * x, width * y}));
            }
        } else {
            total = total + wx * f(Readout::real(width * x));
        }
    }
    return total;
}

// Readout samples projected on a real coordinate: the value itself, or I / -Q
// of a heterodyne readout.
double coordinate(const Readout &r, int which) {
    return which == 0 ? r.re() : -r.im();
}

}  // namespace

TEST(schemes, parse_names) {
    for (auto k : {SchemeKind::TwoOutcome, SchemeKind::Dispersive, SchemeKind::Homodyne, SchemeKind::Heterodyne}) {
        ASSERT_EQ(parse_scheme_kind(scheme_name(k)), k);
    }
    ASSERT_THROW(parse_scheme_kind("photodetection"), DomainError);
}

TEST(schemes, validation) {
    ASSERT_THROW(MeasurementScheme::two_outcome(0.6), DomainError);
    ASSERT_THROW(MeasurementScheme::dispersive(0.0, 0.01), DomainError);
    ASSERT_THROW(MeasurementScheme::homodyne(1.0, 1.0), DomainError);
    ASSERT_THROW(MeasurementScheme::heterodyne(-1.0, 0.1), DomainError);
    ASSERT_THROW(MeasurementScheme::dispersive(1.0, -0.1), DomainError);
    ASSERT_NO_THROW(MeasurementScheme::two_outcome(0.0));
    ASSERT_NO_THROW(MeasurementScheme::homodyne(0.0, 0.5));
}

TEST(schemes, readout_validation) {
    ASSERT_THROW(Readout::binary(0), DomainError);
    ASSERT_THROW(Readout::real(std::nan("")), DomainError);
    ASSERT_THROW(kraus_forward(MeasurementScheme::homodyne(1.0, 0.1), Readout::binary(1)), DomainError);
    ASSERT_THROW(kraus_forward(MeasurementScheme::heterodyne(1.0, 0.1), Readout::real(0.3)), DomainError);
}

TEST(schemes, kraus_forward_two_outcome) {
    double k = 0.3;
    auto s = MeasurementScheme::two_outcome(k);
    Complex2x2 plus = kraus_forward(s, Readout::binary(1)).value();
    Complex2x2 minus = kraus_forward(s, Readout::binary(-1)).value();
    ASSERT_LT((plus - Complex2x2::diag(std::sqrt(1 - k), std::sqrt(k))).max_abs(), 1e-15);
    ASSERT_LT((minus - Complex2x2::diag(std::sqrt(k), std::sqrt(1 - k))).max_abs(), 1e-15);
}

TEST(schemes, kraus_forward_homodyne) {
    double eps = 0.3;
    double r = -0.7;
    auto s = MeasurementScheme::homodyne(3.0, 0.1);
    Complex2x2 m = kraus_forward(s, Readout::real(r)).value();
    double pref = std::exp(-r * r / 2) / std::pow(std::numbers::pi, 0.25);
    Complex2x2 expected{pref * std::sqrt(1 - eps / 2), 0.0, pref * std::sqrt(eps) * r, pref};
    ASSERT_LT((m - expected).max_abs(), 1e-15);
}

TEST(schemes, kraus_forward_dispersive) {
    double tau = 2.0;
    double dt = 0.05;
    auto s = MeasurementScheme::dispersive(tau, dt);
    Complex2x2 zero = kraus_forward(s, Readout::real(0.0)).value();
    double pref = std::pow(dt / (2 * std::numbers::pi * tau), 0.25) * std::exp(-dt / (4 * tau));
    ASSERT_LT((zero - Complex2x2::diag(pref, pref)).max_abs(), 1e-15);

    double r = 3.7;
    Complex2x2 m = kraus_forward(s, Readout::real(r)).value();
    double p = std::pow(dt / (2 * std::numbers::pi * tau), 0.25);
    Complex2x2 expected = Complex2x2::diag(p * std::exp(-(dt / (4 * tau)) * (r - 1) * (r - 1)),
                                           p * std::exp(-(dt / (4 * tau)) * (r + 1) * (r + 1)));
    ASSERT_LT((m - expected).max_abs(), 1e-15);
}

TEST(schemes, kraus_backward_examples) {
    auto disp = MeasurementScheme::dispersive(1.0, 0.1);
    for (double r : {-2.5, 0.0, 0.4, 11.0}) {
        Complex2x2 back = kraus_backward(disp, Readout::real(r)).value();
        Complex2x2 mirrored = kraus_forward(disp, Readout::real(-r)).value();
        ASSERT_LT((back - mirrored).max_abs(), 1e-15);
    }

    auto two = MeasurementScheme::two_outcome(0.15);
    for (int r : {1, -1}) {
        ASSERT_LT((kraus_backward(two, Readout::binary(r)).value() - kraus_forward(two, Readout::binary(-r)).value())
                      .max_abs(),
                  1e-15);
    }

    double eps = 0.4;
    auto het = MeasurementScheme::heterodyne(4.0, 0.1);
    cplx r{0.3, -1.1};
    Complex2x2 back = kraus_backward(het, Readout::complex(r)).value();
    double pref = std::exp(-std::norm(r) / 2) / std::sqrt(std::numbers::pi);
    Complex2x2 expected{pref, 0.0, -pref * std::sqrt(eps) * std::conj(r), pref * std::sqrt(1 - eps)};
    ASSERT_LT((back - expected).max_abs(), 1e-15);
}

TEST(schemes, kraus_backward_singular) {
    MeasurementScheme het{SchemeKind::Heterodyne, 0.5, 1.0, 1.0, 1.0, 0.0};  // eps = 1
    ASSERT_THROW(kraus_backward(het, Readout::complex({0.2, 0.1})), SingularOperatorError);
    ASSERT_THROW(kraus_backward(MeasurementScheme::two_outcome(0.0), Readout::binary(1)), SingularOperatorError);
}

TEST(schemes, backward_times_forward_is_proportional_to_identity) {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        double eps = 0.99 * uniform_open01(rng);
        std::vector<std::pair<MeasurementScheme, Readout>> cases = {
            {MeasurementScheme::two_outcome(0.5 * uniform_open01(rng)), Readout::binary(i % 2 ? 1 : -1)},
            {MeasurementScheme::dispersive(1.0, 2.0 * uniform_open01(rng)), Readout::real(6 * uniform_open01(rng) - 3)},
            {MeasurementScheme::homodyne(1.0, eps), Readout::real(6 * uniform_open01(rng) - 3)},
            {MeasurementScheme::heterodyne(1.0, eps), Readout::complex(3.0 * testutil::random_complex(rng))},
        };
        for (auto &[s, r] : cases) {
            Complex2x2 p = kraus_backward(s, r).mat() * kraus_forward(s, r).mat();
            ASSERT_LT(std::abs(p.a12), 1e-13);
            ASSERT_LT(std::abs(p.a21), 1e-13);
            ASSERT_LT(std::abs(p.a11 - p.a22), 1e-13);
        }
    }
}

TEST(schemes, rabi_unitary) {
    ASSERT_EQ(rabi_unitary(0.0, 0.3), Complex2x2::identity());
    Complex2x2 flip = rabi_unitary(std::numbers::pi, 1.0);
    ASSERT_LT((flip - Complex2x2{0.0, -1.0, 1.0, 0.0}).max_abs(), 1e-15);
    Complex2x2 quarter = rabi_unitary(std::numbers::pi / 2, 1.0);
    double c = std::cos(std::numbers::pi / 4);
    ASSERT_LT((quarter - Complex2x2{c, -c, c, c}).max_abs(), 1e-15);
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        Complex2x2 u = rabi_unitary(20 * uniform_open01(rng), uniform_open01(rng));
        ASSERT_LT((u.adjoint() * u - Complex2x2::identity()).max_abs(), 1e-14);
    }
}

TEST(schemes, readout_pdf_examples) {
    double k = 0.2;
    ASSERT_NEAR(readout_pdf(MeasurementScheme::two_outcome(k), PureQubitState::excited(), Readout::binary(1)), 1 - k,
                1e-15);

    double tau = 1.5;
    double dt = 0.2;
    auto disp = MeasurementScheme::dispersive(tau, dt);
    Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        PureQubitState x = testutil::random_state(rng);
        double z = bloch_from_state(x).z;
        double r = 10 * uniform_open01(rng) - 5;
        double pe = (1 + z) / 2;
        double expected = std::sqrt(dt / (2 * std::numbers::pi * tau)) *
                          (pe * std::exp(-(dt / (2 * tau)) * (r - 1) * (r - 1)) +
                           (1 - pe) * std::exp(-(dt / (2 * tau)) * (r + 1) * (r + 1)));
        ASSERT_NEAR(readout_pdf(disp, x, Readout::real(r)), expected, 1e-14);
    }

    double eps = 0.35;
    auto hom = MeasurementScheme::homodyne(eps, 1.0);
    for (double r : {-2.0, -0.3, 0.0, 1.7}) {
        double expected = std::exp(-r * r) / std::sqrt(std::numbers::pi) *
                          (1 + std::sqrt(eps) * r - eps / 4 + r * r * eps / 2);
        ASSERT_NEAR(readout_pdf(hom, PureQubitState::plus_x(), Readout::real(r)), expected, 1e-14);
    }
}

TEST(schemes, povm_completeness) {
    for (const auto &s : all_schemes()) {
        Complex2x2 total = integrate_readouts(s, [&](const Readout &r) {
            Complex2x2 m = kraus_forward(s, r).value();
            return m.adjoint() * m;
        });
        ASSERT_LT((total - Complex2x2::identity()).max_abs(), 1e-8) << scheme_name(s.kind) << " dt=" << s.dt;
    }
    auto two = MeasurementScheme::two_outcome(0.37);
    Complex2x2 p = kraus_forward(two, Readout::binary(1)).value();
    Complex2x2 m = kraus_forward(two, Readout::binary(-1)).value();
    Complex2x2 sum = p.adjoint() * p + m.adjoint() * m;
    ASSERT_LT((sum - Complex2x2::identity()).max_abs(), 1e-15);
}

TEST(schemes, readout_pdf_normalization) {
    Rng rng(31);
    for (const auto &s : all_schemes()) {
        for (int i = 0; i < 100; ++i) {
            PureQubitState x = testutil::random_state(rng);
            double total = integrate_readouts(s, [&](const Readout &r) { return readout_pdf(s, x, r); });
            ASSERT_NEAR(total, 1.0, 1e-8) << scheme_name(s.kind);
        }
    }
}

TEST(schemes, sample_strong_measurement_of_definite_state) {
    auto s = MeasurementScheme::two_outcome(0.0);
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(sample_readout(s, PureQubitState::excited(), rng).sign(), 1);
        ASSERT_EQ(sample_readout(s, PureQubitState::ground(), rng).sign(), -1);
    }
}

TEST(schemes, sample_dispersive_moments) {
    double tau = 1.0;
    double dt = 0.01;
    auto s = MeasurementScheme::dispersive(tau, dt);
    Rng rng(77);
    const int n = 1000000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = sample_readout(s, PureQubitState::plus_x(), rng).re();
        sum += r;
        sum2 += r * r;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    // Equal-weight mixture of N(+1, tau/dt) and N(-1, tau/dt).
    double exact_var = tau / dt + 1.0;
    ASSERT_LT(std::abs(mean), 4.0 * std::sqrt(exact_var / n));
    ASSERT_NEAR(var, exact_var, 0.01 * exact_var);
}

TEST(schemes, sample_homodyne_ks) {
    double eps = 0.5;
    auto s = MeasurementScheme::homodyne(eps, 1.0);
    Rng rng(1234);
    std::vector<double> xs(1000000);
    for (double &x : xs) {
        x = sample_readout(s, PureQubitState::plus_x(), rng).re();
    }
    auto cdf = [&](double x) {
        return 0.5 * std::erfc(-x) - (std::sqrt(eps) + eps * x / 2) * std::exp(-x * x) / (2 * std::sqrt(std::numbers::pi));
    };
    ASSERT_LT(testutil::ks_distance(std::move(xs), cdf), 0.002);
}

TEST(schemes, sampler_matches_pdf_chi_square) {
    using boost::math::quadrature::gauss_kronrod;
    Rng state_rng(2024);
    const int n_samples = 100000;
    const int n_bins = 50;
    auto gh = testutil::gauss_hermite(64);
    for (const auto &s : all_schemes()) {
        for (int trial = 0; trial < 10; ++trial) {
            PureQubitState x = testutil::random_state(state_rng);
            Rng rng(derive_seed(99, trial));
            std::vector<Readout> samples;
            samples.reserve(n_samples);
            for (int i = 0; i < n_samples; ++i) {
                samples.push_back(sample_readout(s, x, rng));
            }
            if (s.kind == SchemeKind::TwoOutcome) {
                double p = readout_pdf(s, x, Readout::binary(1));
                double plus = 0;
                for (const auto &r : samples) {
                    plus += r.sign() > 0;
                }
                double pv = testutil::chi_square_p_value({plus, n_samples - plus}, {p * n_samples, (1 - p) * n_samples});
                ASSERT_GT(pv, 0.001);
                continue;
            }
            int coords = s.kind == SchemeKind::Heterodyne ? 2 : 1;
            for (int which = 0; which < coords; ++which) {
                // Marginal density of the chosen coordinate, independent of the sampler.
                std::function<double(double)> marginal = [&](double u) {
                    if (s.kind != SchemeKind::Heterodyne) {
                        return readout_pdf(s, x, Readout::real(u));
                    }
                    double total = 0.0;
                    for (auto [v, w] : gh) {
                        cplx r = which == 0 ? cplx{u, -v} : cplx{v, -u};
                        total += w * std::exp(v * v) * readout_pdf(s, x, Readout::complex(r));
                    }
                    return total;
                };
                double spread = s.kind == SchemeKind::Dispersive ? std::sqrt(s.tau / s.dt) + 1.0 : 1.0;
                double lo = -3.0 * spread;
                double hi = 3.0 * spread;
                std::vector<double> edges = {-std::numeric_limits<double>::infinity()};
                for (int b = 0; b < n_bins - 1; ++b) {
                    edges.push_back(lo + (hi - lo) * b / (n_bins - 2));
                }
                edges.push_back(std::numeric_limits<double>::infinity());
                std::vector<double> expected(n_bins);
                for (int b = 0; b < n_bins; ++b) {
                    expected[b] = n_samples * gauss_kronrod<double, 31>::integrate(marginal, edges[b], edges[b + 1], 10);
                }
                std::vector<double> observed(n_bins, 0.0);
                for (const auto &r : samples) {
                    double u = coordinate(r, which);
                    auto it = std::upper_bound(edges.begin(), edges.end(), u);
                    observed[std::distance(edges.begin(), it) - 1] += 1;
                }
                double pv = testutil::chi_square_p_value(observed, expected);
                ASSERT_GT(pv, 0.001) << scheme_name(s.kind) << " dt=" << s.dt << " trial " << trial << " coord "
                                     << which;
            }
        }
    }
}
