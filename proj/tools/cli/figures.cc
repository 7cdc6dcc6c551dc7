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

#include "figures.h"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "curves.h"
#include "output.h"
#include "qarrow/analytic.h"
#include "qarrow/errors.h"
#include "qarrow/ftlab.h"
#include "qarrow/trajectory.h"

namespace qarrow::cli {

namespace {

constexpr double kTau = 1.0;
constexpr double kDt = kTau / 100.0;
const double kDurations[] = {0.5, 1.0, 2.0};

std::string tag(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

MeasurementScheme continuous(SchemeKind kind, double omega = 0.0) {
    switch (kind) {
        case SchemeKind::Dispersive:
            return MeasurementScheme::dispersive(kTau, kDt, omega);
        case SchemeKind::Homodyne:
            return MeasurementScheme::homodyne(1.0 / kTau, kDt, omega);
        default:
            return MeasurementScheme::heterodyne(1.0 / kTau, kDt, omega);
    }
}

const SchemeKind kContinuous[] = {SchemeKind::Dispersive, SchemeKind::Homodyne, SchemeKind::Heterodyne};

std::size_t steps_for(double t_ratio) {
    return static_cast<std::size_t>(std::lround(t_ratio * kTau / kDt));
}

/// Accumulates a CSV table row by row.
class Table {
   public:
    explicit Table(std::string header) {
        out_ << std::setprecision(17) << header << '\n';
    }
    template <typename... Ts>
    void row(const Ts &...values) {
        bool first = true;
        ((out_ << (first ? "" : ",") << values, first = false), ...);
        out_ << '\n';
    }
    std::string str() const {
        return out_.str();
    }

   private:
    std::ostringstream out_;
};

class FigureWriter {
   public:
    FigureWriter(std::string id, const FigureOptions &options, std::filesystem::path dir)
        : options_(options), dir_(std::move(dir)) {
        manifest_["figure"] = std::move(id);
        manifest_["scale"] = options.scale;
        manifest_["seed"] = options.seed;
        manifest_["trajectories"] = trajectories();
        manifest_["series"] = nlohmann::json::array();
    }

    std::size_t trajectories() const {
        double n = std::floor(static_cast<double>(options_.trajectories) / options_.scale);
        return std::max<std::size_t>(100, static_cast<std::size_t>(n));
    }

    /// Each ensemble of the figure gets its own seed, derived from the figure
    /// seed and the ensemble's position.
    uint64_t next_seed() {
        return derive_seed(options_.seed, ensemble_++);
    }

    EnsembleOptions ensemble() const {
        return {.workers = options_.workers};
    }

    std::size_t bins() const {
        return options_.bins;
    }

    void emit(const std::string &name, const std::string &kind, const std::string &content, nlohmann::json params) {
        std::string file = name + ".csv";
        write_file(dir_ / file, content);
        manifest_["series"].push_back({{"name", name}, {"file", file}, {"kind", kind}, {"params", std::move(params)}});
    }

    nlohmann::json finish() {
        write_file(dir_ / "manifest.json", manifest_.dump(2) + "\n");
        return manifest_;
    }

   private:
    FigureOptions options_;
    std::filesystem::path dir_;
    nlohmann::json manifest_;
    uint64_t ensemble_ = 0;
};

nlohmann::json scheme_params(const MeasurementScheme &s, std::size_t steps) {
    nlohmann::json j{{"scheme", std::string(scheme_name(s.kind))}, {"dt", s.dt}, {"steps", steps}, {"omega", s.omega}};
    if (s.kind == SchemeKind::Dispersive) {
        j["tau"] = s.tau;
    } else if (s.kind == SchemeKind::TwoOutcome) {
        j["k"] = s.k;
    } else {
        j["gamma"] = s.gamma;
    }
    return j;
}

std::vector<double> lambdas(std::span<const ArrowOfTimeSample> samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        out.push_back(s.lambda);
    }
    return out;
}

std::vector<double> qs(std::span<const ArrowOfTimeSample> samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto &s : samples) {
        out.push_back(s.q);
    }
    return out;
}

void ft_row(Table &t, double x, const FtEstimate &e) {
    t.row(x, e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat, e.mu_hat_stderr, 1.0 - e.mu_hat, e.mean_q,
          e.mean_q_stderr, e.bound);
}

const char *const kFtColumns = "meanExpNegQ,meanExpNegQStderr,muHat,muHatStderr,oneMinusMuHat,meanQ,meanQStderr,bound";

void figure1(FigureWriter &w) {
    for (SchemeKind kind : kContinuous) {
        MeasurementScheme s = continuous(kind);
        Rng rng(w.next_seed());
        Trajectory t = simulate_forward(PureQubitState::plus_x(), s, steps_for(2.0), rng);
        std::ostringstream csv;
        write_trajectory_csv(csv, t);
        w.emit("fig1_record_" + std::string(scheme_name(kind)), "record", csv.str(), scheme_params(s, t.steps));
    }
    for (SchemeKind kind : kContinuous) {
        MeasurementScheme s = continuous(kind);
        for (double tr : kDurations) {
            std::size_t steps = steps_for(tr);
            Histogram h = q_histogram(s, PureQubitState::plus_x(), steps, w.trajectories(), w.bins(), w.next_seed(),
                                      w.ensemble());
            auto params = scheme_params(s, steps);
            params["T_over_tau"] = tr;
            w.emit("fig1_q_" + std::string(scheme_name(kind)) + "_T" + tag(tr), "histogram", histogram_csv(h), params);
        }
    }
    for (double tr : kDurations) {
        CurveParams p;
        p.t_ratio = tr;
        w.emit("fig1_q_dispersive_analytic_T" + tag(tr), "curve", curve_csv(make_curve("p-q", p, 0.01, 8.0, 400)),
               {{"T_over_tau", tr}});
    }
}

void figure2(FigureWriter &w) {
    const double grid[] = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
    for (SchemeKind kind : kContinuous) {
        MeasurementScheme s = continuous(kind);
        Table t(std::string("T_over_tau,") + kFtColumns);
        for (double tr : grid) {
            ft_row(t, tr,
                   estimate_ft(s, PureQubitState::plus_x(), steps_for(tr), w.trajectories(), w.next_seed(),
                               w.ensemble()));
        }
        w.emit("fig2_" + std::string(scheme_name(kind)), "table", t.str(), scheme_params(s, 0));
    }
    Table exact("T_over_tau,muExact,oneMinusMuExact");
    for (double tr : linspace(0.05, 2.5, 50)) {
        double mu = mu_dispersive_exact(tr);
        exact.row(tr, mu, 1.0 - mu);
    }
    w.emit("fig2_dispersive_exact", "table", exact.str(), {{"scheme", "dispersive"}, {"z0", 0.0}});
}

void figure_s1(FigureWriter &w) {
    const double z0s[] = {0.0, 0.5, 1.0};
    Table ft("k,z0,enumeratedMeanExpNegQ,oneMinusMuK,mcMeanExpNegQ,mcMeanExpNegQStderr,mcMuHat,mcMuHatStderr");
    for (int i = 1; i <= 10; ++i) {
        double k = 0.05 * i;
        auto s = MeasurementScheme::two_outcome(k);
        for (double z0 : z0s) {
            PureQubitState x0 = state_from_bloch({std::sqrt(1 - z0 * z0), 0.0, z0});
            double enumerated = 0.0;
            for (int r : {1, -1}) {
                double p = readout_pdf(s, x0, Readout::binary(r));
                if (p > 0.0) {
                    enumerated += p * arrow_of_time(trajectory_from_record(x0, s, {Readout::binary(r)})).exp_neg_q;
                }
            }
            FtEstimate e = estimate_ft(s, x0, 1, w.trajectories(), w.next_seed(), w.ensemble());
            ft.row(k, z0, enumerated, 1.0 - mu_k(k, z0), e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat,
                   e.mu_hat_stderr);
        }
    }
    w.emit("s1_two_outcome_ft", "table", ft.str(), {{"scheme", "two-outcome"}, {"steps", 1}});

    for (double z0 : z0s) {
        CurveParams p;
        p.z0 = z0;
        w.emit("s1_avg_q_k_z" + tag(z0), "curve", curve_csv(make_curve("avg-q-k", p, 0.005, 0.5, 100)),
               {{"z0", z0}});
    }

    Table mixed("k,meanMuFlat,oneMinusMeanMuFlat,mcMeanExpNegQ,mcMeanExpNegQStderr,mcMuHat,mcMuHatStderr");
    for (int i = 1; i <= 9; ++i) {
        double k = 0.05 * i;
        FtEstimate e = estimate_ft_mixed_initial(MeasurementScheme::two_outcome(k), uniform_z_on_xz_circle(), 1,
                                                 w.trajectories(), w.next_seed(), w.ensemble());
        double mu = mean_mu_flat_z(k);
        mixed.row(k, mu, 1.0 - mu, e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat, e.mu_hat_stderr);
    }
    w.emit("s1_flat_prior_ft", "table", mixed.str(), {{"scheme", "two-outcome"}, {"initial", "z0 uniform"}});
}

void figure_s2(FigureWriter &w) {
    Table single(std::string("scheme,epsilon,") + kFtColumns + ",muQuadrature");
    for (SchemeKind kind : {SchemeKind::Homodyne, SchemeKind::Heterodyne}) {
        for (int i = 1; i <= 9; ++i) {
            double eps = 0.1 * i;
            MeasurementScheme s = kind == SchemeKind::Homodyne ? MeasurementScheme::homodyne(eps, 1.0)
                                                               : MeasurementScheme::heterodyne(eps, 1.0);
            FtEstimate e = estimate_ft(s, PureQubitState::plus_x(), 1, w.trajectories(), w.next_seed(), w.ensemble());
            single.row(scheme_name(kind), eps, e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat, e.mu_hat_stderr,
                       1.0 - e.mu_hat, e.mean_q, e.mean_q_stderr, e.bound,
                       mu_quadrature_single_step(s, PureQubitState::plus_x()));
        }
    }
    w.emit("s2_single_step_vs_gamma", "table", single.str(), {{"steps", 1}, {"x0", "+x"}});

    Table rabi(std::string("scheme,omega_tau,") + kFtColumns);
    for (SchemeKind kind : kContinuous) {
        for (double omega : {0.0, 0.5, 1.0, 2.0, 4.0}) {
            MeasurementScheme s = continuous(kind, omega / kTau);
            FtEstimate e = estimate_ft(s, PureQubitState::plus_x(), steps_for(0.5), w.trajectories(), w.next_seed(),
                                       w.ensemble());
            rabi.row(scheme_name(kind), omega, e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat, e.mu_hat_stderr,
                     1.0 - e.mu_hat, e.mean_q, e.mean_q_stderr, e.bound);
        }
    }
    w.emit("s2_rabi_sweep", "table", rabi.str(), {{"T_over_tau", 0.5}, {"x0", "+x"}});
}

void figure_s3(FigureWriter &w) {
    MeasurementScheme disp = continuous(SchemeKind::Dispersive);
    for (double tr : kDurations) {
        std::size_t steps = steps_for(tr);
        auto samples = sample_ensemble(disp, point_mass(PureQubitState::plus_x()), steps, w.trajectories(),
                                       w.next_seed(), w.ensemble());
        auto params = scheme_params(disp, steps);
        params["T_over_tau"] = tr;
        w.emit("s3_q_dispersive_T" + tag(tr), "histogram", histogram_csv(make_histogram(qs(samples), w.bins())),
               params);
        w.emit("s3_lambda_dispersive_T" + tag(tr), "histogram",
               histogram_csv(make_histogram(lambdas(samples), w.bins(), 0.0, 1.0)), params);
        CurveParams p;
        p.t_ratio = tr;
        w.emit("s3_q_dispersive_analytic_T" + tag(tr), "curve", curve_csv(make_curve("p-q", p, 0.01, 8.0, 400)),
               {{"T_over_tau", tr}});
        w.emit("s3_lambda_dispersive_analytic_T" + tag(tr), "curve",
               curve_csv(make_curve("p-lambda", p, 0.0025, 0.9975, 400)), {{"T_over_tau", tr}});
    }

    Table ft(std::string("T_over_tau,") + kFtColumns + ",muExact");
    for (double tr : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        FtEstimate e = estimate_ft(disp, PureQubitState::plus_x(), steps_for(tr), w.trajectories(), w.next_seed(),
                                   w.ensemble());
        ft.row(tr, e.mean_exp_neg_q, e.mean_exp_neg_q_stderr, e.mu_hat, e.mu_hat_stderr, 1.0 - e.mu_hat, e.mean_q,
               e.mean_q_stderr, e.bound, mu_dispersive_exact(tr));
    }
    w.emit("s3_dispersive_ft_vs_T", "table", ft.str(), scheme_params(disp, 0));

    MeasurementScheme hom = continuous(SchemeKind::Homodyne);
    std::size_t steps = steps_for(0.5);
    Histogram h = q_histogram(hom, PureQubitState::plus_x(), steps, w.trajectories(), w.bins(), w.next_seed(),
                              w.ensemble());
    w.emit("s3_q_homodyne_T0.5", "histogram", histogram_csv(h), scheme_params(hom, steps));
    CurveParams p;
    p.epsilon = 0.5;
    w.emit("s3_q_homodyne_effective_analytic", "curve",
           curve_csv(make_curve("p-q-homodyne", p, q_min_homodyne(0.5) + 1e-6, 4.0, 400)), {{"epsilon_eff", 0.5}});
}

}  // namespace

std::vector<std::string> figure_ids() {
    return {"fig1", "fig2", "s1", "s2", "s3"};
}

nlohmann::json reproduce_figure(const std::string &id, const FigureOptions &options,
                                const std::filesystem::path &dir) {
    if (!(options.scale > 0.0)) {
        throw DomainError("scale must be positive");
    }
    FigureWriter w(id, options, dir);
    if (id == "fig1") {
        figure1(w);
    } else if (id == "fig2") {
        figure2(w);
    } else if (id == "s1") {
        figure_s1(w);
    } else if (id == "s2") {
        figure_s2(w);
    } else if (id == "s3") {
        figure_s3(w);
    } else {
        throw DomainError("unknown figure '" + id + "' (expected fig1, fig2, s1, s2 or s3)");
    }
    return w.finish();
}

}  // namespace qarrow::cli
