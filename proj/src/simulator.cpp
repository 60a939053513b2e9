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

#include "fasaris/simulator.hpp"

#include "fasaris/errors.hpp"
#include "fasaris/parallel.hpp"
#include "fasaris/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fasaris {

namespace {

constexpr double kRootDrop = 1e-12;

std::uint64_t shard_trials(const McSpec& mc, int shard)
{
    const std::uint64_t base = mc.trials / static_cast<std::uint64_t>(mc.shards);
    if (shard + 1 == mc.shards)
        return mc.trials - base * static_cast<std::uint64_t>(mc.shards - 1);
    return base;
}

// Fills `out` (even length) with standard normals.
void fill_normals(ShardStream& rng, std::vector<double>& uniforms, std::span<double> out)
{
    uniforms.resize(out.size());
    rng.fill_uniform(uniforms);
    simd::kernels().box_muller(uniforms.data(), out.data(), out.size() / 2);
}

} // namespace

void McSpec::validate() const
{
    if (trials < 1)
        throw ConfigError("trials: must be >= 1", "trials");
    if (shards < 1)
        throw ConfigError("shards: must be >= 1", "shards");
    if (static_cast<std::uint64_t>(shards) > trials)
        throw ConfigError("shards: cannot exceed trials", "shards");
}

McEstimate McEstimate::from_counts(std::uint64_t outages, std::uint64_t trials)
{
    McEstimate e;
    e.trials = trials;
    e.outages = outages;
    e.op_hat = trials > 0 ? static_cast<double>(outages) / static_cast<double>(trials) : 0.0;
    e.ci_half_width = trials > 0 ? 1.96 * std::sqrt(e.op_hat * (1.0 - e.op_hat) / static_cast<double>(trials)) : 0.0;
    return e;
}

PortGainSampler::PortGainSampler(const SystemConfig& cfg, const CorrelationMatrix& sigma, Eigen::MatrixXd sigma_root)
    : m_(cfg.M), h_scale_(std::sqrt(cfg.eps1 / 2.0)), v_scale_(std::sqrt(cfg.eps2 / 2.0)), root_(std::move(sigma_root))
{
    if (cfg.M < 1)
        throw ConfigError("M: number of RIS elements must be a positive integer", "M");
    if (root_.rows() != sigma.n() || root_.cols() < 1)
        throw NumericalError("PortGainSampler: correlation root has the wrong shape");
    const double err = (root_ * root_.transpose() - sigma.entries()).cwiseAbs().maxCoeff();
    if (!(err <= 1e-9)) {
        std::ostringstream os;
        os << "PortGainSampler: correlation root reproduces Sigma only to " << err;
        throw NumericalError(os.str());
    }
    const auto m = static_cast<std::size_t>(m_);
    const auto r = static_cast<std::size_t>(root_.cols());
    normals_.resize(2 * m * (1 + r));
    h_abs_.resize(m);
    root_t_ = root_.transpose();
    v_re_.resize(m_, root_.rows());
    v_im_.resize(m_, root_.rows());
}

PortGainSampler::PortGainSampler(const SystemConfig& cfg, const CorrelationMatrix& sigma)
    : PortGainSampler(cfg, sigma, sigma.root(kRootDrop))
{
}

void PortGainSampler::sample(ShardStream& rng, std::span<double> gains)
{
    const auto& k = simd::kernels();
    const auto m = static_cast<std::size_t>(m_);
    const auto r = static_cast<std::size_t>(root_.cols());
    const auto n = static_cast<std::size_t>(root_.rows());
    if (gains.size() != n)
        throw DomainError("PortGainSampler::sample: gains span must have N entries");

    fill_normals(rng, uniforms_, normals_);
    // Real parts: [h | z_0 | ... | z_{r-1}], imaginary parts follow in the same layout.
    const double* re = normals_.data();
    const double* im = normals_.data() + m * (1 + r);
    k.modulus(re, im, h_scale_, h_abs_.data(), m);

    using ConstMap = Eigen::Map<const Eigen::MatrixXd>;
    const auto mi = static_cast<Eigen::Index>(m);
    const auto ri = static_cast<Eigen::Index>(r);
    v_re_.noalias() = ConstMap(re + m, mi, ri) * root_t_;
    v_im_.noalias() = ConstMap(im + m, mi, ri) * root_t_;
    for (std::size_t port = 0; port < n; ++port) {
        const auto col = static_cast<Eigen::Index>(port);
        gains[port] = v_scale_ * k.weighted_modulus_sum(h_abs_.data(), v_re_.col(col).data(), v_im_.col(col).data(), m);
    }
}

std::vector<double> sample_port_gains(const SystemConfig& cfg, const CorrelationMatrix& sigma,
                                      const Eigen::MatrixXd& sigma_root, ShardStream& rng)
{
    PortGainSampler sampler(cfg, sigma, sigma_root);
    std::vector<double> gains(static_cast<std::size_t>(sampler.ports()));
    sampler.sample(rng, gains);
    return gains;
}

std::string_view scenario_name(Scenario s)
{
    switch (s) {
    case Scenario::fas_aris:
        return "fas_aris";
    case Scenario::fas_ris:
        return "fas_ris";
    case Scenario::no_ris:
        return "no_ris";
    case Scenario::no_fas:
        return "no_fas";
    case Scenario::no_fas_no_ris:
        return "no_fas_no_ris";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name)
{
    for (Scenario s : {Scenario::fas_aris, Scenario::fas_ris, Scenario::no_ris, Scenario::no_fas,
                       Scenario::no_fas_no_ris})
        if (scenario_name(s) == name)
            return s;
    throw ConfigError("scenario: unknown scenario '" + std::string(name) + "'", "scenario");
}

ScenarioSetup scenario_setup(const SystemConfig& cfg, Scenario scenario)
{
    ScenarioSetup setup{cfg, true};
    switch (scenario) {
    case Scenario::fas_aris:
        break;
    case Scenario::fas_ris:
        setup.cfg.omega_dB = 0.0;
        break;
    case Scenario::no_ris:
        setup.cfg.omega_dB = 0.0;
        setup.cfg.N = 1;
        setup.reflected = false;
        break;
    case Scenario::no_fas:
        setup.cfg.N = 1;
        break;
    case Scenario::no_fas_no_ris:
        setup.cfg.omega_dB = 0.0;
        setup.cfg.N = 1;
        setup.reflected = false;
        break;
    }
    return setup;
}

std::vector<McEstimate> simulate_op_batch(const SystemConfig& cfg, std::span<const LinkBudget> budgets,
                                          const McSpec& mc, bool reflected)
{
    cfg.validate();
    mc.validate();
    const CorrelationMatrix sigma = build_sigma(cfg.N, cfg.W);
    const Eigen::MatrixXd root = sigma.root(kRootDrop);
    const auto shards = static_cast<std::size_t>(mc.shards);
    const std::size_t nb = budgets.size();
    std::vector<std::vector<std::uint64_t>> counts(shards, std::vector<std::uint64_t>(nb, 0));

    parallel_for(shards, [&](std::size_t s) {
        ShardStream rng(mc.seed, s);
        PortGainSampler sampler(cfg, sigma, root);
        std::vector<double> gains(static_cast<std::size_t>(cfg.N));
        auto& local = counts[s];
        const std::uint64_t n = shard_trials(mc, static_cast<int>(s));
        for (std::uint64_t t = 0; t < n; ++t) {
            double best = 0.0;
            if (reflected) {
                sampler.sample(rng, gains);
                best = *std::max_element(gains.begin(), gains.end());
            }
            const double chi = std::sqrt(-cfg.eps3 * std::log(rng.uniform()));
            for (std::size_t b = 0; b < nb; ++b) {
                const double amp = budgets[b].omega1 * best + budgets[b].omega2 * chi;
                if (amp * amp < budgets[b].beta)
                    ++local[b];
            }
        }
    });

    std::vector<McEstimate> out(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        std::uint64_t total = 0;
        for (std::size_t s = 0; s < shards; ++s)
            total += counts[s][b];
        out[b] = McEstimate::from_counts(total, mc.trials);
    }
    return out;
}

McEstimate simulate_op(const SystemConfig& cfg, const McSpec& mc)
{
    const LinkBudget lb = link_budget(cfg);
    return simulate_op_batch(cfg, std::span<const LinkBudget>(&lb, 1), mc).front();
}

McEstimate simulate_baselines(const SystemConfig& cfg, const McSpec& mc, Scenario scenario)
{
    const ScenarioSetup setup = scenario_setup(cfg, scenario);
    const LinkBudget lb = link_budget(setup.cfg);
    return simulate_op_batch(setup.cfg, std::span<const LinkBudget>(&lb, 1), mc, setup.reflected).front();
}

namespace {

constexpr std::size_t kSurrogateShards = 8;

// Shared driver: `draw_max` consumes normals and returns the maximum of one trial.
template <class DrawMax>
std::vector<double> surrogate_cdf_mc(std::size_t normals_per_trial, std::span<const double> ys,
                                     std::uint64_t trials, std::uint64_t seed, DrawMax draw_max)
{
    if (trials < kSurrogateShards)
        throw DomainError("surrogate Monte Carlo needs at least 8 trials");
    const std::size_t per = normals_per_trial + (normals_per_trial & 1u);
    std::vector<std::vector<std::uint64_t>> counts(kSurrogateShards, std::vector<std::uint64_t>(ys.size(), 0));
    parallel_for(kSurrogateShards, [&](std::size_t s) {
        ShardStream rng(seed, s);
        std::vector<double> uniforms;
        std::vector<double> normals(per);
        const std::uint64_t base = trials / kSurrogateShards;
        const std::uint64_t n = s + 1 == kSurrogateShards ? trials - base * (kSurrogateShards - 1) : base;
        for (std::uint64_t t = 0; t < n; ++t) {
            fill_normals(rng, uniforms, normals);
            const double mx = draw_max(normals.data());
            for (std::size_t i = 0; i < ys.size(); ++i)
                if (mx < ys[i])
                    ++counts[s][i];
        }
    });
    std::vector<double> cdf(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        std::uint64_t total = 0;
        for (auto& c : counts)
            total += c[i];
        cdf[i] = static_cast<double>(total) / static_cast<double>(trials);
    }
    return cdf;
}

} // namespace

std::vector<double> surrogate_bc_cdf_mc(const GaussianSurrogate& s, const BlockPartition& part,
                                        std::span<const double> ys, std::uint64_t trials, std::uint64_t seed)
{
    const std::size_t b_count = part.block_sizes.size();
    const auto n = static_cast<std::size_t>(part.port_count());
    const double sd = std::sqrt(s.v_gamma);
    const double a2 = std::sqrt(std::max(0.0, 1.0 - s.rho1)) * sd;
    const double a1 = std::sqrt(std::max(0.0, s.rho1 - s.rho0)) * sd;
    const double a0 = std::sqrt(s.rho0) * sd;
    return surrogate_cdf_mc(1 + b_count + n, ys, trials, seed, [&](const double* z) {
        const double common = s.e_gamma + a0 * z[0];
        const double* z1 = z + 1;
        const double* z2 = z + 1 + b_count;
        double mx = -HUGE_VAL;
        std::size_t k = 0;
        for (std::size_t b = 0; b < b_count; ++b) {
            const double block = common + a1 * z1[b];
            for (int l = 0; l < part.block_sizes[b]; ++l, ++k)
                mx = std::max(mx, block + a2 * z2[k]);
        }
        return mx;
    });
}

std::vector<double> surrogate_iid_cdf_mc(const GaussianSurrogate& s, int b_count, std::span<const double> ys,
                                         std::uint64_t trials, std::uint64_t seed)
{
    const double sd = std::sqrt(s.v_gamma);
    const double a1 = std::sqrt(1.0 - s.rho0) * sd;
    const double a0 = std::sqrt(s.rho0) * sd;
    const auto nb = static_cast<std::size_t>(b_count);
    return surrogate_cdf_mc(1 + nb, ys, trials, seed, [&](const double* d) {
        const double common = s.e_gamma + a0 * d[0];
        double mx = -HUGE_VAL;
        for (std::size_t b = 0; b < nb; ++b)
            mx = std::max(mx, common + a1 * d[1 + b]);
        return mx;
    });
}

} // namespace fasaris
