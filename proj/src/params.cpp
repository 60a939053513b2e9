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

#include "fasaris/params.hpp"

#include "fasaris/errors.hpp"

#include <cmath>
#include <string>

namespace fasaris {

namespace {

void require(bool ok, const char* key, const std::string& msg)
{
    if (!ok)
        throw ConfigError(std::string(key) + ": " + msg, key);
}

double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

} // namespace

void SystemConfig::validate() const
{
    require(std::isfinite(P_dBm), "P_dBm", "must be finite (dBm)");
    require(std::isfinite(omega_dB), "omega_dB", "must be finite (dB)");
    require(M >= 1, "M", "number of RIS elements must be a positive integer");
    require(N >= 1, "N", "number of FAS ports must be a positive integer");
    require(W > 0.0 && std::isfinite(W), "W", "aperture must be > 0 (wavelengths)");
    require(R > 0.0 && std::isfinite(R), "R", "target rate must be > 0 (bit/s/Hz)");
    require(alpha > 0.0 && std::isfinite(alpha), "alpha", "path-loss exponent must be > 0");
    require(eps1 > 0.0 && std::isfinite(eps1), "eps1", "variance must be > 0");
    require(eps2 > 0.0 && std::isfinite(eps2), "eps2", "variance must be > 0");
    require(eps3 > 0.0 && std::isfinite(eps3), "eps3", "variance must be > 0");
    require(std::isfinite(sigma_k2_dBm), "sigma_k2_dBm", "must be finite (dBm)");
    require(std::isfinite(sigma_r2_dBm), "sigma_r2_dBm", "must be finite (dBm)");
    require(d0 > 0.0 && std::isfinite(d0), "d0", "reference distance must be > 0 (m)");
    require(bs_pos != ris_pos, "ris_pos", "BS and RIS positions coincide");
    require(ris_pos != rx_pos, "rx_pos", "RIS and receiver positions coincide");
    require(bs_pos != rx_pos, "rx_pos", "BS and receiver positions coincide");
}

double dbm_to_watt(double dBm)
{
    return std::pow(10.0, (dBm - 30.0) / 10.0);
}

double amplitude_gain(const SystemConfig& cfg)
{
    return std::pow(10.0, cfg.omega_dB / (cfg.omega_dB_10log10 ? 10.0 : 20.0));
}

double outage_threshold(double rate)
{
    return std::exp2(rate) - 1.0;
}

Distances derive_distances(const SystemConfig& cfg)
{
    Distances d;
    d.d_sr = distance(cfg.bs_pos, cfg.ris_pos);
    d.d_rd = distance(cfg.ris_pos, cfg.rx_pos);
    d.d_sd = distance(cfg.bs_pos, cfg.rx_pos);
    if (!(d.d_sr > 0.0))
        throw ConfigError("ris_pos: BS and RIS positions coincide", "ris_pos");
    if (!(d.d_rd > 0.0))
        throw ConfigError("rx_pos: RIS and receiver positions coincide", "rx_pos");
    if (!(d.d_sd > 0.0))
        throw ConfigError("rx_pos: BS and receiver positions coincide", "rx_pos");
    return d;
}

LinkBudget link_budget(const SystemConfig& cfg)
{
    cfg.validate();
    LinkBudget lb;
    lb.dist = derive_distances(cfg);

    const double w = amplitude_gain(cfg);
    const double p = dbm_to_watt(cfg.P_dBm);
    lb.sigma2_W = w * w * dbm_to_watt(cfg.sigma_k2_dBm) + dbm_to_watt(cfg.sigma_r2_dBm);
    const double snr_scale = std::sqrt(p / lb.sigma2_W);
    lb.omega1 = w * snr_scale * std::pow(lb.dist.d_sr * lb.dist.d_rd / cfg.d0, -cfg.alpha / 2.0);
    lb.omega2 = snr_scale * std::pow(lb.dist.d_sd / cfg.d0, -cfg.alpha / 2.0);
    lb.beta = outage_threshold(cfg.R);

    if (!(lb.omega1 > 0.0) || !std::isfinite(lb.omega1))
        throw ConfigError("derived reflected-path scale Omega_1 is not positive", "P_dBm");
    if (!(lb.omega2 > 0.0) || !std::isfinite(lb.omega2))
        throw ConfigError("derived direct-path scale Omega_2 is not positive", "P_dBm");
    if (!(lb.sigma2_W > 0.0) || !std::isfinite(lb.sigma2_W))
        throw ConfigError("effective noise power is not positive", "sigma_r2_dBm");
    if (!(lb.beta > 0.0) || !std::isfinite(lb.beta))
        throw ConfigError("outage threshold 2^R - 1 is not positive/finite", "R");
    return lb;
}

} // namespace fasaris
