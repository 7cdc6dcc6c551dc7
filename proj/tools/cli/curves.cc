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

#include "curves.h"

#include <functional>
#include <sstream>

#include "qarrow/errors.h"

namespace qarrow::cli {

namespace {

struct CurveSpec {
    std::string name;
    double lo;
    double hi;
    std::function<std::string(const CurveParams &)> describe;
    std::function<double(const CurveParams &, double)> f;
};

std::string fmt(const char *key, double v) {
    std::ostringstream out;
    out << key << '=' << v;
    return out.str();
}

const std::vector<CurveSpec> &registry() {
    static const std::vector<CurveSpec> specs = {
        {"mu-k", 0.0, 0.5, [](const CurveParams &p) { return "mu_k(k; " + fmt("z0", p.z0) + ")"; },
         [](const CurveParams &p, double x) { return mu_k(x, p.z0); }},
        {"avg-q-k", 0.005, 0.5, [](const CurveParams &p) { return "<Q_k>(k; " + fmt("z0", p.z0) + ")"; },
         [](const CurveParams &p, double x) { return avg_q_k(x, p.z0); }},
        {"q-z", -3.0, 3.0, [](const CurveParams &p) { return "Q_z(R; " + fmt("z0", p.z0) + ")"; },
         [](const CurveParams &p, double x) { return q_z(x, p.z0); }},
        {"p-lambda", 0.005, 0.995,
         [](const CurveParams &p) { return "P(lambda; " + fmt("T/tau", p.t_ratio) + ")"; },
         [](const CurveParams &p, double x) { return p_lambda_dispersive(x, p.t_ratio); }},
        {"p-q", 0.02, 6.0, [](const CurveParams &p) { return "P(Q; " + fmt("T/tau", p.t_ratio) + ")"; },
         [](const CurveParams &p, double x) { return p_q_dispersive(x, p.t_ratio); }},
        {"mu-dispersive", 0.1, 3.0, [](const CurveParams &) { return std::string("mu_D,exact(T/tau)"); },
         [](const CurveParams &, double x) { return mu_dispersive_exact(x); }},
        {"q-homodyne", -4.0, 4.0, [](const CurveParams &p) { return "Q_Ho(r; " + fmt("eps", p.epsilon) + ")"; },
         [](const CurveParams &p, double x) { return q_homodyne_single_step(p.epsilon, x); }},
        {"p-q-homodyne", -1.5, 4.0,
         [](const CurveParams &p) { return "P_Ho(Q; " + fmt("eps", p.epsilon) + ")"; },
         [](const CurveParams &p, double x) { return pdf_q_homodyne_single_step(p.epsilon, x); }},
        {"mean-mu-flat", 0.005, 0.5, [](const CurveParams &) { return std::string("<mu>_flat(k)"); },
         [](const CurveParams &, double x) { return mean_mu_flat_z(x); }},
    };
    return specs;
}

}  // namespace

std::vector<std::string> curve_names() {
    std::vector<std::string> out;
    for (const auto &s : registry()) {
        out.push_back(s.name);
    }
    return out;
}

AnalyticCurve make_curve(const std::string &name, const CurveParams &params, std::optional<double> lo,
                         std::optional<double> hi, std::size_t points) {
    for (const auto &s : registry()) {
        if (s.name != name) {
            continue;
        }
        if (points < 2) {
            throw DomainError("curves need at least 2 grid points");
        }
        auto grid = linspace(lo.value_or(s.lo), hi.value_or(s.hi), points);
        return tabulate(s.describe(params), grid, [&](double x) { return s.f(params, x); });
    }
    throw DomainError("unknown curve '" + name + "'");
}

}  // namespace qarrow::cli
