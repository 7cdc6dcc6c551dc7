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

#include "qarrow/ftlab.h"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"

#include "qarrow/analytic.h"
#include "qarrow/errors.h"
#include "test_util.h"

using namespace qarrow;

namespace {

PureQubitState on_xz(double z0) {
    return state_from_bloch({std::sqrt(1 - z0 * z0), 0.0, z0});
}

// Distance in standard errors, with a rounding floor for degenerate ensembles.
double diff_sigma(double a, double sa, double b, double sb) {
    return std::abs(a - b) / (std::hypot(sa, sb) + 1e-14);
}

}  // namespace

TEST(ftlab, deterministic_across_worker_counts) {
    auto s = MeasurementScheme::heterodyne(1.0, 0.02, 0.5);
    FtEstimate one = estimate_ft(s, PureQubitState::plus_x(), 25, 3001, 99, {.workers = 1});
    for (std::size_t w : {2u, 8u}) {
        FtEstimate many = estimate_ft(s, PureQubitState::plus_x(), 25, 3001, 99, {.workers = w});
        ASSERT_EQ(one, many) << w;
    }
    FtEstimate other = estimate_ft(s, PureQubitState::plus_x(), 25, 3001, 100);
    ASSERT_NE(one.mean_exp_neg_q, other.mean_exp_neg_q);
}

TEST(ftlab, requires_enough_trajectories) {
    ASSERT_THROW(estimate_ft(MeasurementScheme::dispersive(1.0, 0.1), PureQubitState::plus_x(), 5, 99, 1),
                 DomainError);
}

TEST(ftlab, summary_statistics) {
    std::vector<ArrowOfTimeSample> samples;
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        double q = standard_normal(rng);
        double lambda = uniform_open01(rng);
        samples.push_back({q, lambda, std::exp(-q)});
    }
    FtEstimate e = summarize(samples);
    double n = samples.size();
    double mq = 0.0;
    double ml = 0.0;
    double me = 0.0;
    for (const auto &s : samples) {
        mq += s.q / n;
        ml += s.lambda / n;
        me += s.exp_neg_q / n;
    }
    double vq = 0.0;
    double vs = 0.0;
    for (const auto &s : samples) {
        vq += (s.q - mq) * (s.q - mq) / (n - 1);
        double d = s.exp_neg_q + s.lambda - me - ml;
        vs += d * d / (n - 1);
    }
    ASSERT_EQ(e.n_trajectories, 1000u);
    ASSERT_NEAR(e.mean_q, mq, 1e-13);
    ASSERT_NEAR(e.mu_hat, ml, 1e-13);
    ASSERT_NEAR(e.mean_exp_neg_q, me, 1e-13);
    ASSERT_NEAR(e.mean_q_stderr, std::sqrt(vq / n), 1e-13);
    ASSERT_NEAR(e.consistency_stderr, std::sqrt(vs / n), 1e-13);
    ASSERT_NEAR(e.bound, -std::log(1 - ml), 1e-13);
    ASSERT_NEAR(e.bound_stderr, e.mu_hat_stderr / (1 - ml), 1e-13);
}

TEST(ftlab, residual_equals_consistency_residual) {
    for (const auto &s : {MeasurementScheme::dispersive(1.0, 0.01), MeasurementScheme::homodyne(1.0, 0.01),
                          MeasurementScheme::heterodyne(1.0, 0.01)}) {
        FtEstimate e = estimate_ft(s, PureQubitState::plus_x(), 50, 2000, 7);
        ASSERT_NEAR(e.ft_residual(), e.consistency - 1.0, 1e-14);
        ASSERT_LT(std::abs(e.consistency - 1.0), 4.0 * e.consistency_stderr + 1e-12);
        ASSERT_LT(std::abs(e.ft_residual()), 3.0 * e.ft_residual_stderr() + 1e-12);
    }
}

TEST(ftlab, two_outcome_single_step) {
    for (double k : {0.1, 0.3}) {
        for (double z0 : {0.0, 0.5}) {
            FtEstimate e = estimate_ft(MeasurementScheme::two_outcome(k), on_xz(z0), 1, 20000, 3);
            ASSERT_LT(diff_sigma(e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, 1 - mu_k(k, z0), 0.0), 3.0);
            ASSERT_LT(diff_sigma(e.mu_hat, e.mu_hat_stderr, mu_k(k, z0), 0.0), 3.0);
        }
    }
}

TEST(ftlab, dispersive_exact_value) {
    FtEstimate e = estimate_ft(MeasurementScheme::dispersive(1.0, 0.01), PureQubitState::plus_x(), 100, 20000, 11);
    ASSERT_LT(diff_sigma(e.mu_hat, e.mu_hat_stderr, 0.550400490793327170, 0.0), 3.0);
}

TEST(ftlab, no_measurement_limit) {
    for (const auto &s : {MeasurementScheme::homodyne(0.0, 0.1, 1.0), MeasurementScheme::heterodyne(0.0, 0.1)}) {
        Rng rng(1);
        FtEstimate e = estimate_ft(s, testutil::random_state(rng), 20, 200, 5);
        ASSERT_NEAR(e.mean_q, 0.0, 1e-12);
        ASSERT_NEAR(e.mu_hat, 0.0, 1e-12);
        ASSERT_NEAR(e.mean_exp_neg_q, 1.0, 1e-12);
    }
}

TEST(ftlab, mixed_initial_two_outcome) {
    for (double k : {0.1, 0.25, 0.4}) {
        FtEstimate e = estimate_ft_mixed_initial(MeasurementScheme::two_outcome(k), uniform_z_on_xz_circle(), 1,
                                                 20000, 13);
        double expected = 1.0 - mean_mu_flat_z(k);
        ASSERT_LT(diff_sigma(e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, expected, 0.0), 3.0) << k;
    }
}

TEST(ftlab, point_mass_sampler_matches_fixed_state) {
    auto s = MeasurementScheme::homodyne(1.0, 0.05, 0.3);
    PureQubitState x0 = on_xz(0.2);
    ASSERT_EQ(estimate_ft(s, x0, 20, 500, 8), estimate_ft_mixed_initial(s, point_mass(x0), 20, 500, 8));
}

TEST(ftlab, non_informative_mixed_initial) {
    for (const auto &sampler : {uniform_z_on_xz_circle(), uniform_on_sphere()}) {
        FtEstimate e = estimate_ft_mixed_initial(MeasurementScheme::two_outcome(0.5), sampler, 3, 500, 2);
        ASSERT_EQ(e.mu_hat, 0.0);
    }
}

TEST(ftlab, samplers_draw_valid_states) {
    Rng rng(12);
    auto flat = uniform_z_on_xz_circle();
    auto haar = uniform_on_sphere();
    double zsum = 0.0;
    for (int i = 0; i < 20000; ++i) {
        BlochVector v = bloch_from_state(flat(rng));
        ASSERT_NEAR(v.norm(), 1.0, 1e-12);
        ASSERT_NEAR(v.y, 0.0, 1e-15);
        ASSERT_GE(v.x, -1e-15);
        zsum += v.z;
        ASSERT_NEAR(bloch_from_state(haar(rng)).norm(), 1.0, 1e-12);
    }
    ASSERT_LT(std::abs(zsum / 20000), 4.0 / std::sqrt(3.0 * 20000));
}

TEST(ftlab, monotone_irreversibility) {
    for (const auto &proto : {MeasurementScheme::dispersive(1.0, 0.01), MeasurementScheme::homodyne(1.0, 0.01),
                              MeasurementScheme::heterodyne(1.0, 0.01)}) {
        std::vector<FtEstimate> es;
        for (std::size_t steps : {50u, 100u, 200u}) {
            es.push_back(estimate_ft(proto, PureQubitState::plus_x(), steps, 4000, 31));
        }
        for (int i = 0; i < 2; ++i) {
            double gap = es[i + 1].mu_hat - es[i].mu_hat;
            ASSERT_GT(gap, 3.0 * std::hypot(es[i].mu_hat_stderr, es[i + 1].mu_hat_stderr)) << scheme_name(proto.kind);
        }
    }
}

TEST(ftlab, quadrature_examples) {
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::two_outcome(0.25), PureQubitState::plus_x()), 0.25,
                1e-15);
    for (double k : {0.05, 0.3}) {
        ASSERT_EQ(mu_quadrature_single_step(MeasurementScheme::two_outcome(k), PureQubitState::excited()), 0.0);
        ASSERT_EQ(mu_quadrature_single_step(MeasurementScheme::two_outcome(k), PureQubitState::ground()), 0.0);
    }
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::two_outcome(0.1), on_xz(0.5)), 0.571428571428571429,
                1e-14);
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::homodyne(0.1, 1.0), PureQubitState::plus_x()),
                0.00141753213624268309, 1e-8);
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::homodyne(0.5, 1.0), PureQubitState::plus_x()),
                0.0412488371860015765, 1e-8);
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::heterodyne(0.1, 1.0), PureQubitState::plus_x()),
                0.0526111065442738968, 1e-8);
    ASSERT_NEAR(mu_quadrature_single_step(MeasurementScheme::heterodyne(0.5, 1.0), PureQubitState::plus_x()),
                0.323560423322268319, 1e-8);
}

TEST(ftlab, quadrature_matches_both_sides_for_homodyne) {
    for (double eps : {0.1, 0.5, 0.9}) {
        auto s = MeasurementScheme::homodyne(eps, 1.0);
        double mu = mu_quadrature_single_step(s, PureQubitState::plus_x());
        double lhs = testutil::gh_integrate([&](double r) {
            return readout_pdf_homodyne_plus_x(eps, r) * std::exp(-q_homodyne_single_step(eps, r));
        });
        ASSERT_NEAR(lhs, 1.0 - mu, 1e-6) << eps;
    }
}

TEST(ftlab, quadrature_for_dispersive) {
    // A single step of duration T from the equator is the whole-record problem.
    for (auto [t_ratio, mu] : {std::pair{0.5, 0.350113404675130814}, std::pair{2.0, 0.768981778070704381}}) {
        auto s = MeasurementScheme::dispersive(1.0, t_ratio);
        ASSERT_NEAR(mu_quadrature_single_step(s, PureQubitState::plus_x()), mu, 1e-8);
    }
}

TEST(ftlab, histogram_normalization) {
    Rng rng(9);
    std::vector<double> values(5000);
    for (double &v : values) {
        v = standard_normal(rng);
    }
    Histogram h = make_histogram(values, 37);
    ASSERT_EQ(h.bins(), 37u);
    double mass = 0.0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        mass += h.density[i] * h.width();
        total += h.counts[i];
    }
    ASSERT_NEAR(mass, 1.0, 1e-12);
    ASSERT_EQ(total, values.size());
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    ASSERT_NEAR(h.lo, *mn - 0.01 * (*mx - *mn), 1e-12);
    ASSERT_NEAR(h.hi, *mx + 0.01 * (*mx - *mn), 1e-12);
    ASSERT_NEAR(h.left_edge(3), h.lo + 3 * h.width(), 1e-12);
    ASSERT_NEAR(h.right_edge(3), h.lo + 4 * h.width(), 1e-12);

    ASSERT_THROW(make_histogram(values, 9), DomainError);
    ASSERT_THROW(make_histogram(std::vector<double>{}, 10), DomainError);

    Histogram clipped = make_histogram(values, 10, -1.0, 1.0);
    double inside = 0.0;
    for (std::size_t i = 0; i < clipped.bins(); ++i) {
        inside += clipped.density[i] * clipped.width();
    }
    ASSERT_NEAR(inside, std::erf(1.0 / std::sqrt(2.0)), 0.03);
}

TEST(ftlab, two_point_histogram) {
    double k = 0.2;
    double z0 = 0.6;
    auto s = MeasurementScheme::two_outcome(k);
    Histogram h = q_histogram(s, on_xz(z0), 1, 20000, 10, 5);
    double q_plus = q_two_outcome(k, z0, 1);
    double q_minus = q_two_outcome(k, z0, -1);
    double p_plus = readout_pdf(s, on_xz(z0), Readout::binary(1));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        double mass = h.density[i] * h.width();
        if (h.counts[i] == 0) {
            continue;
        }
        ++nonzero;
        double center = 0.5 * (h.left_edge(i) + h.right_edge(i));
        double expected = std::abs(center - q_plus) < std::abs(center - q_minus) ? p_plus : 1 - p_plus;
        ASSERT_NEAR(mass, expected, 4.0 * std::sqrt(expected * (1 - expected) / 20000));
    }
    ASSERT_EQ(nonzero, 2u);
}
