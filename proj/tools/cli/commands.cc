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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "config.h"
#include "curves.h"
#include "figures.h"
#include "output.h"
#include "qarrow/errors.h"
#include "qarrow/ftlab.h"
#include "qarrow/trajectory.h"

namespace qarrow::cli {

namespace {

/// Command-line values that override the config file.
struct Overrides {
    std::string config_path;
    std::optional<std::string> scheme;
    std::optional<double> k;
    std::optional<double> tau;
    std::optional<double> gamma;
    std::optional<double> omega;
    std::optional<double> dt;
    std::optional<double> duration;
    std::optional<std::size_t> trajectories;
    std::optional<uint64_t> seed;
    std::optional<std::string> bloch;
    std::optional<std::size_t> bins;
    std::optional<std::string> out;
    std::optional<std::size_t> workers;
    double scale = 1.0;
};

void add_experiment_flags(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config_path, "Flat JSON experiment config; flags override its fields");
    cmd->add_option("--scheme", o.scheme, "two-outcome, dispersive, homodyne or heterodyne");
    cmd->add_option("--k", o.k, "Two-outcome measurement strength in [0, 1/2]");
    cmd->add_option("--tau", o.tau, "Dispersive measurement time");
    cmd->add_option("--gamma", o.gamma, "Fluorescence decay rate");
    cmd->add_option("--omega", o.omega, "Rabi frequency");
    cmd->add_option("--dt", o.dt, "Time step");
    cmd->add_option("--duration", o.duration, "Record duration T (an integer number of steps)");
    cmd->add_option("--trajectories", o.trajectories, "Ensemble size");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--bloch", o.bloch, "Initial Bloch vector x,y,z");
    cmd->add_option("--bins", o.bins, "Histogram bins");
    cmd->add_option("--out", o.out, "Output path (stdout if omitted)");
    cmd->add_option("--workers", o.workers, "Worker threads; results do not depend on it");
    cmd->add_option("--scale", o.scale, "Divides the trajectory count");
}

ExperimentConfig load_config(const Overrides &o) {
    ExperimentConfig c;
    if (!o.config_path.empty()) {
        std::ifstream f(o.config_path);
        if (!f) {
            throw IoError("cannot read config '" + o.config_path + "'");
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(f);
        } catch (const nlohmann::json::exception &e) {
            throw DomainError("config '" + o.config_path + "' is not valid JSON: " + e.what());
        }
        c = config_from_json(j);
    }
    if (o.scheme) c.scheme = *o.scheme;
    if (o.k) c.k = *o.k;
    if (o.tau) c.tau = *o.tau;
    if (o.gamma) c.gamma = *o.gamma;
    if (o.omega) c.omega = *o.omega;
    if (o.dt) c.dt = *o.dt;
    if (o.duration) c.duration = *o.duration;
    if (o.trajectories) c.n_trajectories = *o.trajectories;
    if (o.seed) c.master_seed = *o.seed;
    if (o.bloch) c.x0 = parse_bloch(*o.bloch);
    if (o.bins) c.bins = *o.bins;
    if (o.out) c.out = *o.out;
    if (o.workers) c.workers = *o.workers;
    if (!(o.scale > 0.0)) {
        throw DomainError("--scale must be positive");
    }
    if (o.scale != 1.0) {
        c.n_trajectories = std::max<std::size_t>(
            100, static_cast<std::size_t>(static_cast<double>(c.n_trajectories) / o.scale));
    }
    return c;
}

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

int cmd_simulate(const Overrides &o, std::ostream &out) {
    ExperimentConfig c = load_config(o);
    ResolvedExperiment r = resolve(c);
    Rng rng(derive_seed(r.master_seed, 0));
    Trajectory t = simulate_forward(r.x0, r.scheme, r.steps, rng);
    std::ostringstream csv;
    write_trajectory_csv(csv, t);
    emit(c.out, csv.str(), out);
    return kExitOk;
}

int cmd_ft_check(const Overrides &o, bool self_test, std::ostream &out, std::ostream &err) {
    ExperimentConfig c = load_config(o);
    ResolvedExperiment r = resolve(c);
    FtEstimate e = estimate_ft(r.scheme, r.x0, r.steps, r.n_trajectories, r.master_seed, {.workers = r.workers});
    nlohmann::json j = ft_estimate_json(e);
    j["config"] = to_json(c);
    j["config"].erase("workers");
    j["steps"] = r.steps;
    emit(c.out, j.dump(2) + "\n", out);
    if (self_test) {
        double slack = 1e-12;
        bool closure = std::abs(e.ft_residual()) <= 5.0 * e.ft_residual_stderr() + slack;
        bool consistency = std::abs(e.consistency - 1.0) <= 5.0 * e.consistency_stderr + slack;
        if (!closure || !consistency) {
            err << "self-test failed: FT residual " << e.ft_residual() << " +- " << e.ft_residual_stderr() << "\n";
            return kExitNumeric;
        }
    }
    return kExitOk;
}

int cmd_histogram(const Overrides &o, const std::string &quantity, std::ostream &out) {
    ExperimentConfig c = load_config(o);
    ResolvedExperiment r = resolve(c);
    auto samples = sample_ensemble(r.scheme, point_mass(r.x0), r.steps, r.n_trajectories, r.master_seed,
                                   {.workers = r.workers});
    std::vector<double> values;
    values.reserve(samples.size());
    for (const auto &s : samples) {
        values.push_back(quantity == "lambda" ? s.lambda : s.q);
    }
    emit(c.out, histogram_csv(make_histogram(values, r.bins)), out);
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Arrow-of-time statistics of continuously measured qubits"};
    app.require_subcommand(1);

    Overrides sim;
    auto *simulate = app.add_subcommand("simulate", "Dump one trajectory as CSV");
    add_experiment_flags(simulate, sim);

    Overrides ft;
    bool self_test = false;
    auto *ft_check = app.add_subcommand("ft-check", "Estimate both sides of the fluctuation theorem");
    add_experiment_flags(ft_check, ft);
    ft_check->add_flag("--self-test", self_test, "Exit with code 3 unless the FT closes within 5 standard errors");

    Overrides hist;
    std::string quantity = "q";
    auto *histogram = app.add_subcommand("histogram", "Density histogram of Q or lambda");
    add_experiment_flags(histogram, hist);
    histogram->add_option("--quantity", quantity, "q or lambda")->check(CLI::IsMember({"q", "lambda"}));

    std::string curve;
    CurveParams curve_params;
    std::optional<double> lo;
    std::optional<double> hi;
    std::size_t points = 200;
    std::string curve_out;
    auto *analytic = app.add_subcommand("analytic", "Tabulate a closed-form curve as CSV");
    analytic->add_option("--curve", curve, "Curve name")->required()->check(CLI::IsMember(curve_names()));
    analytic->add_option("--k", curve_params.k, "Two-outcome strength");
    analytic->add_option("--z0", curve_params.z0, "Initial z coordinate");
    analytic->add_option("--tratio", curve_params.t_ratio, "T / tau");
    analytic->add_option("--epsilon", curve_params.epsilon, "Homodyne strength");
    analytic->add_option("--lo", lo, "Grid start");
    analytic->add_option("--hi", hi, "Grid end");
    analytic->add_option("--grid", points, "Grid points");
    analytic->add_option("--out", curve_out, "Output path (stdout if omitted)");

    std::string figure;
    FigureOptions fig_options;
    std::string fig_dir;
    auto *reproduce = app.add_subcommand("reproduce-figure", "Write the data series of a figure");
    reproduce->add_option("--figure", figure, "fig1, fig2, s1, s2 or s3")->required();
    reproduce->add_option("--scale", fig_options.scale, "Divides every trajectory count");
    reproduce->add_option("--seed", fig_options.seed, "Master seed");
    reproduce->add_option("--trajectories", fig_options.trajectories, "Trajectories per ensemble before scaling");
    reproduce->add_option("--bins", fig_options.bins, "Histogram bins");
    reproduce->add_option("--workers", fig_options.workers, "Worker threads");
    reproduce->add_option("--out", fig_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o;
        std::ostringstream e_out;
        int code = app.exit(e, o, e_out);
        out << o.str();
        err << e_out.str();
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*simulate) {
            return cmd_simulate(sim, out);
        }
        if (*ft_check) {
            return cmd_ft_check(ft, self_test, out, err);
        }
        if (*histogram) {
            return cmd_histogram(hist, quantity, out);
        }
        if (*analytic) {
            emit(curve_out, curve_csv(make_curve(curve, curve_params, lo, hi, points)), out);
            return kExitOk;
        }
        if (*reproduce) {
            nlohmann::json manifest = reproduce_figure(figure, fig_options, fig_dir);
            out << "wrote " << manifest["series"].size() << " series to " << fig_dir << "\n";
            return kExitOk;
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}

}  // namespace qarrow::cli
