// SPDX-License-Identifier: Apache-2.0
//
// fasaris: outage analysis for fluid-antenna receivers behind an active RIS
// Copyright (C) 2026 The fasaris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "fasaris/correlation.hpp"
#include "fasaris/moments.hpp"
#include "fasaris/params.hpp"
#include "fasaris/rng.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fasaris {

struct McSpec {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int shards = 1; // shard s draws from ShardStream(seed, s); the last shard takes the remainder

    void validate() const; // throws ConfigError
};

struct McEstimate {
    double op_hat = 0.0;
    double ci_half_width = 0.0; // 95% normal approximation
    std::uint64_t trials = 0;
    std::uint64_t outages = 0;

    static McEstimate from_counts(std::uint64_t outages, std::uint64_t trials);
    bool operator==(const McEstimate&) const = default;
};

// Draws the N port gains gamma_k = sum_m |h_m||v_mk| of one channel realisation.
// h_m ~ CN(0, eps1) i.i.d.; (v_m1..v_mN) ~ CN(0, eps2 Sigma) i.i.d. over m.
class PortGainSampler {
public:
    // `sigma_root` is N x r with root * root^T = Sigma to 1e-9 (checked).
    PortGainSampler(const SystemConfig& cfg, const CorrelationMatrix& sigma, Eigen::MatrixXd sigma_root);
    PortGainSampler(const SystemConfig& cfg, const CorrelationMatrix& sigma);

    int ports() const noexcept { return static_cast<int>(root_.rows()); }
    int elements() const noexcept { return m_; }

    void sample(ShardStream& rng, std::span<double> gains);

private:
    int m_;
    double h_scale_;
    double v_scale_;
    Eigen::MatrixXd root_;
    std::vector<double> uniforms_;
    std::vector<double> normals_;
    std::vector<double> h_abs_;
    Eigen::MatrixXd root_t_;
    Eigen::MatrixXd v_re_;
    Eigen::MatrixXd v_im_;
};

std::vector<double> sample_port_gains(const SystemConfig& cfg, const CorrelationMatrix& sigma,
                                      const Eigen::MatrixXd& sigma_root, ShardStream& rng);

enum class Scenario { fas_aris, fas_ris, no_ris, no_fas, no_fas_no_ris };

std::string_view scenario_name(Scenario s);
Scenario parse_scenario(std::string_view name); // throws ConfigError

// Configuration and path set realising a comparison scenario:
//   fas_ris: unit amplitude gain, noise sigma_k^2 + sigma_r^2;
//   no_fas: single port; no_ris: single port, reflected path removed, unit gain;
//   no_fas_no_ris: both.
struct ScenarioSetup {
    SystemConfig cfg;
    bool reflected = true;
};
ScenarioSetup scenario_setup(const SystemConfig& cfg, Scenario scenario);

// Per trial: best reflected gain gamma* over ports (or 0 without the reflected path) and a
// Rayleigh |chi| with E|chi|^2 = eps3 drawn independently of the selection. Each budget counts
// outage events (Omega1 gamma* + Omega2 |chi|)^2 < beta on the same draws.
std::vector<McEstimate> simulate_op_batch(const SystemConfig& cfg, std::span<const LinkBudget> budgets,
                                          const McSpec& mc, bool reflected = true);

McEstimate simulate_op(const SystemConfig& cfg, const McSpec& mc);
McEstimate simulate_baselines(const SystemConfig& cfg, const McSpec& mc, Scenario scenario);

// Monte Carlo of the Gaussian decompositions behind the analytic CDFs. Returns the empirical
// CDF of the maximum at each y.
//   bc:  gamma_kb = E + sqrt(1 - rho1) z2_kb + sqrt(rho1 - rho0) z1_b + sqrt(rho0) z0
//   iid: gamma_b  = E + sqrt(1 - rho0) d_b + sqrt(rho0) d0
// All z, d ~ N(0, V).
std::vector<double> surrogate_bc_cdf_mc(const GaussianSurrogate& s, const BlockPartition& part,
                                        std::span<const double> ys, std::uint64_t trials, std::uint64_t seed);
std::vector<double> surrogate_iid_cdf_mc(const GaussianSurrogate& s, int b_count, std::span<const double> ys,
                                         std::uint64_t trials, std::uint64_t seed);

} // namespace fasaris
