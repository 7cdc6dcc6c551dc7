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

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qarrow/errors.h"

namespace qarrow {

namespace {

template <typename F>
double pairwise_sum(std::span<const ArrowOfTimeSample> xs, const F &f) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (const auto &x : xs) {
            s += f(x);
        }
        return s;
    }
    std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half), f) + pairwise_sum(xs.subspan(half), f);
}

struct Moments {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};

template <typename F>
Moments moments(std::span<const ArrowOfTimeSample> xs, const F &f) {
    double n = static_cast<double>(xs.size());
    Moments m;
    m.mean = pairwise_sum(xs, f) / n;
    if (xs.size() > 1) {
        double ss = pairwise_sum(xs, [&](const ArrowOfTimeSample &x) {
            double d = f(x) - m.mean;
            return d * d;
        });
        m.stderr_of_mean = std::sqrt(ss / (n - 1.0) / n);
    }
    return m;
}

// |<x0bar|E|x0>|^2 / <x0|E|x0> for the single-step operator M(r); the drive
// does not enter because U^dagger U = I.
double lambda_weight(const MeasurementScheme &scheme, const Complex2x2 &basis, const Readout &r) {
    LogScaledMatrix m = kraus_forward(scheme, r);
    Complex2x2 l = m.mat() * basis;
    double a = std::norm(l.a11) + std::norm(l.a21);
    cplx c = std::conj(l.a12) * l.a11 + std::conj(l.a22) * l.a21;
    if (a == 0.0) {
        return 0.0;
    }
    return std::exp(2.0 * m.log_scale()) * std::norm(c) / a;
}

constexpr double kAbsTolerance = 1e-8;

template <typename F>
double integrate_real_line(const F &f, double scale, double abs_tol, const char *what) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    double value = scale * gauss_kronrod<double, 61>::integrate([&](double u) { return f(scale * u); }, -inf, inf,
                                                               15, 1e-13, &error);
    error *= scale;
    if (!(error <= abs_tol) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << what << ": quadrature error estimate " << error << " exceeds " << abs_tol;
        throw NumericError(msg.str());
    }
    return value;
}

}  // namespace

double FtEstimate::jensen_stderr() const {
    return std::hypot(mean_q_stderr, bound_stderr);
}

InitialStateSampler point_mass(const PureQubitState &x0) {
    return [x0](Rng &) { return x0; };
}

InitialStateSampler uniform_z_on_xz_circle() {
    return [](Rng &rng) {
        double z = 2.0 * uniform_open01(rng) - 1.0;
        return state_from_bloch({std::sqrt(std::max(0.0, 1.0 - z * z)), 0.0, z});
    };
}

InitialStateSampler uniform_on_sphere() {
    return [](Rng &rng) {
        double z = 2.0 * uniform_open01(rng) - 1.0;
        double phi = 2.0 * std::numbers::pi * uniform_open01(rng);
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        return state_from_bloch({rho * std::cos(phi), rho * std::sin(phi), z});
    };
}

std::vector<ArrowOfTimeSample> sample_ensemble(const MeasurementScheme &scheme, const InitialStateSampler &initial,
                                               std::size_t steps, std::size_t trajectories, uint64_t master_seed,
                                               EnsembleOptions options) {
    std::vector<ArrowOfTimeSample> out(trajectories);
    auto run_one = [&](std::size_t i) {
        Rng rng(derive_seed(master_seed, i));
        PureQubitState x0 = initial(rng);
        Trajectory t = simulate_forward(x0, scheme, steps, rng, {.record_path = false});
        out[i] = arrow_of_time(t);
    };

    std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(trajectories, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < trajectories; ++i) {
            run_one(i);
        }
        return out;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < trajectories; i += workers) {
                        run_one(i);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

FtEstimate summarize(std::span<const ArrowOfTimeSample> samples) {
    if (samples.empty()) {
        throw DomainError("summarize: no samples");
    }
    FtEstimate est;
    est.n_trajectories = samples.size();
    Moments e = moments(samples, [](const ArrowOfTimeSample &s) { return s.exp_neg_q; });
    Moments l = moments(samples, [](const ArrowOfTimeSample &s) { return s.lambda; });
    Moments q = moments(samples, [](const ArrowOfTimeSample &s) { return s.q; });
    Moments c = moments(samples, [](const ArrowOfTimeSample &s) { return s.exp_neg_q + s.lambda; });
    est.mean_exp_neg_q = e.mean;
    est.mean_exp_neg_q_stderr = e.stderr_of_mean;
    est.mu_hat = l.mean;
    est.mu_hat_stderr = l.stderr_of_mean;
    est.mean_q = q.mean;
    est.mean_q_stderr = q.stderr_of_mean;
    est.consistency = c.mean;
    est.consistency_stderr = c.stderr_of_mean;
    est.bound = -std::log1p(-est.mu_hat);
    est.bound_stderr = est.mu_hat_stderr / (1.0 - est.mu_hat);
    return est;
}

FtEstimate estimate_ft(const MeasurementScheme &scheme, const PureQubitState &x0, std::size_t steps,
                       std::size_t trajectories, uint64_t master_seed, EnsembleOptions options) {
    return estimate_ft_mixed_initial(scheme, point_mass(x0), steps, trajectories, master_seed, options);
}

FtEstimate estimate_ft_mixed_initial(const MeasurementScheme &scheme, const InitialStateSampler &initial,
                                     std::size_t steps, std::size_t trajectories, uint64_t master_seed,
                                     EnsembleOptions options) {
    if (trajectories < 100) {
        throw DomainError("estimate_ft: at least 100 trajectories are required");
    }
    auto samples = sample_ensemble(scheme, initial, steps, trajectories, master_seed, options);
    return summarize(samples);
}

double mu_quadrature_single_step(const MeasurementScheme &scheme, const PureQubitState &x0) {
    Complex2x2 basis = basis_change(x0);
    switch (scheme.kind) {
        case SchemeKind::TwoOutcome:
            return lambda_weight(scheme, basis, Readout::binary(1)) + lambda_weight(scheme, basis, Readout::binary(-1));
        case SchemeKind::Dispersive: {
            double width = std::sqrt(scheme.tau / scheme.dt);
            return integrate_real_line([&](double r) { return lambda_weight(scheme, basis, Readout::real(r)); },
                                       width, kAbsTolerance, "mu_quadrature_single_step");
        }
        case SchemeKind::Homodyne:
            return integrate_real_line([&](double r) { return lambda_weight(scheme, basis, Readout::real(r)); }, 1.0,
                                       kAbsTolerance, "mu_quadrature_single_step");
        case SchemeKind::Heterodyne: {
            auto inner = [&](double in_phase) {
                return integrate_real_line(
                    [&](double quadrature) {
                        return lambda_weight(scheme, basis, Readout::complex({in_phase, -quadrature}));
                    },
                    1.0, 1e-10, "mu_quadrature_single_step (inner)");
            };
            return integrate_real_line(inner, 1.0, kAbsTolerance, "mu_quadrature_single_step");
        }
    }
    throw DomainError("mu_quadrature_single_step: unknown scheme");
}

double Histogram::left_edge(std::size_t i) const {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
}

double Histogram::right_edge(std::size_t i) const {
    return i + 1 == counts.size() ? hi : left_edge(i + 1);
}

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
    if (values.empty()) {
        throw DomainError("make_histogram: no values");
    }
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    double lo = *mn;
    double hi = *mx;
    double span = hi - lo;
    if (span > 0.0) {
        lo -= 0.01 * span;
        hi += 0.01 * span;
    } else {
        lo -= 0.5;
        hi += 0.5;
    }
    return make_histogram(values, bins, lo, hi);
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
    if (bins < 10) {
        throw DomainError("make_histogram: at least 10 bins are required");
    }
    if (values.empty()) {
        throw DomainError("make_histogram: no values");
    }
    if (!(hi > lo)) {
        throw DomainError("make_histogram: empty range");
    }
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bins, 0);
    double scale = static_cast<double>(bins) / (hi - lo);
    for (double v : values) {
        if (!(v >= lo && v < hi)) {
            continue;
        }
        auto i = static_cast<std::size_t>((v - lo) * scale);
        ++h.counts[std::min(i, bins - 1)];
    }
    double norm = 1.0 / (static_cast<double>(values.size()) * h.width());
    h.density.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        h.density[i] = static_cast<double>(h.counts[i]) * norm;
    }
    return h;
}

Histogram q_histogram(const MeasurementScheme &scheme, const PureQubitState &x0, std::size_t steps,
                      std::size_t trajectories, std::size_t bins, uint64_t master_seed, EnsembleOptions options) {
    auto samples = sample_ensemble(scheme, point_mass(x0), steps, trajectories, master_seed, options);
    std::vector<double> q(samples.size());
    std::transform(samples.begin(), samples.end(), q.begin(), [](const ArrowOfTimeSample &s) { return s.q; });
    return make_histogram(q, bins);
}

}  // namespace qarrow
