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

#include "output.h"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace qarrow::cli {

nlohmann::json ft_estimate_json(const FtEstimate &e) {
    nlohmann::json j;
    j["meanExpNegQ"] = e.mean_exp_neg_q;
    j["meanExpNegQStderr"] = e.mean_exp_neg_q_stderr;
    j["muHat"] = e.mu_hat;
    j["muHatStderr"] = e.mu_hat_stderr;
    j["meanQ"] = e.mean_q;
    j["meanQStderr"] = e.mean_q_stderr;
    j["bound"] = e.bound;
    j["boundStderr"] = e.bound_stderr;
    j["consistency"] = e.consistency;
    j["consistencyStderr"] = e.consistency_stderr;
    j["ftResidual"] = e.ft_residual();
    j["ftResidualStderr"] = e.ft_residual_stderr();
    j["nTrajectories"] = e.n_trajectories;
    return j;
}

std::string histogram_csv(const Histogram &h) {
    std::ostringstream out;
    out << std::setprecision(17) << "left_edge,right_edge,density\n";
    for (std::size_t i = 0; i < h.bins(); ++i) {
        out << h.left_edge(i) << ',' << h.right_edge(i) << ',' << h.density[i] << '\n';
    }
    return out.str();
}

std::string curve_csv(const AnalyticCurve &c) {
    std::ostringstream out;
    out << std::setprecision(17) << "# formula: " << c.tag << "\nx,value\n";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        out << c.x[i] << ',' << c.values[i] << '\n';
    }
    return out.str();
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace qarrow::cli
