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

#include "fasaris/config_io.hpp"

#include "fasaris/errors.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace fasaris {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string_view unit_of(std::string_view key)
{
    for (const auto& k : config_keys())
        if (k.name == key)
            return k.unit;
    return "?";
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value)
{
    throw ConfigError(std::string(key) + ": invalid value '" + std::string(value) + "' (expected "
                          + std::string(unit_of(key)) + ")",
                      std::string(key));
}

double to_double(std::string_view key, std::string_view v)
{
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        bad_value(key, v);
    return out;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v)
{
    Int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        bad_value(key, v);
    return out;
}

bool to_bool(std::string_view key, std::string_view v)
{
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    bad_value(key, v);
}

Point2 to_point(std::string_view key, std::string_view v)
{
    const auto comma = v.find(',');
    if (comma == std::string_view::npos)
        bad_value(key, v);
    return {to_double(key, trim(v.substr(0, comma))), to_double(key, trim(v.substr(comma + 1)))};
}

} // namespace

const std::vector<ConfigKey>& config_keys()
{
    static const std::vector<ConfigKey> keys{
        {"P_dBm", "transmit power in dBm"},
        {"omega_dB", "ARIS amplification in dB"},
        {"omega_dB_10log10", "true|false: read omega_dB as 10*log10 of the amplitude gain"},
        {"M", "positive integer count of RIS elements"},
        {"N", "positive integer count of FAS ports"},
        {"W", "FAS aperture in wavelengths, > 0"},
        {"R", "target rate in bit/s/Hz, > 0"},
        {"alpha", "path-loss exponent, > 0"},
        {"eps1", "BS-RIS channel variance, > 0"},
        {"eps2", "RIS-port channel variance, > 0"},
        {"eps3", "direct channel variance, > 0"},
        {"sigma_k2_dBm", "port noise power in dBm"},
        {"sigma_r2_dBm", "receiver noise power in dBm"},
        {"d0", "reference distance in meters, > 0"},
        {"bs_pos", "x, y in meters"},
        {"ris_pos", "x, y in meters"},
        {"rx_pos", "x, y in meters"},
        {"lambda_th", "eigenvalue threshold, > 0"},
        {"mu", "intra-block correlation in (0, 1]"},
        {"u", "quadrature nodes per panel, integer >= 4"},
        {"h_gauss", "Gaussian truncation in standard deviations, >= 4"},
        {"h_chi", "envelope truncation in units of sqrt(eps3), >= 4"},
        {"trials", "Monte Carlo trials, integer >= 1"},
        {"seed", "64-bit unsigned integer"},
        {"shards", "independent random substreams, integer >= 1"},
    };
    return keys;
}

void RunConfig::validate() const
{
    system.validate();
    quad.validate();
    mc.validate();
    if (!(analytic.lambda_th > 0.0))
        throw ConfigError("lambda_th: must be > 0", "lambda_th");
    if (!(analytic.mu > 0.0 && analytic.mu <= 1.0))
        throw ConfigError("mu: must lie in (0, 1]", "mu");
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value)
{
    value = trim(value);
    SystemConfig& s = cfg.system;
    if (key == "P_dBm") s.P_dBm = to_double(key, value);
    else if (key == "omega_dB") s.omega_dB = to_double(key, value);
    else if (key == "omega_dB_10log10") s.omega_dB_10log10 = to_bool(key, value);
    else if (key == "M") s.M = to_int<int>(key, value);
    else if (key == "N") s.N = to_int<int>(key, value);
    else if (key == "W") s.W = to_double(key, value);
    else if (key == "R") s.R = to_double(key, value);
    else if (key == "alpha") s.alpha = to_double(key, value);
    else if (key == "eps1") s.eps1 = to_double(key, value);
    else if (key == "eps2") s.eps2 = to_double(key, value);
    else if (key == "eps3") s.eps3 = to_double(key, value);
    else if (key == "sigma_k2_dBm") s.sigma_k2_dBm = to_double(key, value);
    else if (key == "sigma_r2_dBm") s.sigma_r2_dBm = to_double(key, value);
    else if (key == "d0") s.d0 = to_double(key, value);
    else if (key == "bs_pos") s.bs_pos = to_point(key, value);
    else if (key == "ris_pos") s.ris_pos = to_point(key, value);
    else if (key == "rx_pos") s.rx_pos = to_point(key, value);
    else if (key == "lambda_th") cfg.analytic.lambda_th = to_double(key, value);
    else if (key == "mu") cfg.analytic.mu = to_double(key, value);
    else if (key == "u") cfg.quad.u = to_int<int>(key, value);
    else if (key == "h_gauss") cfg.quad.h_gauss = to_double(key, value);
    else if (key == "h_chi") cfg.quad.h_chi = to_double(key, value);
    else if (key == "trials") cfg.mc.trials = to_int<std::uint64_t>(key, value);
    else if (key == "seed") cfg.mc.seed = to_int<std::uint64_t>(key, value);
    else if (key == "shards") cfg.mc.shards = to_int<int>(key, value);
    else throw ConfigError("unknown configuration key '" + std::string(key) + "'", std::string(key));
}

RunConfig parse_config(std::string_view text, RunConfig base)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read configuration file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string to_config_text(const RunConfig& cfg)
{
    const SystemConfig& s = cfg.system;
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    os << "P_dBm = " << s.P_dBm << "\n"
       << "omega_dB = " << s.omega_dB << "\n"
       << "omega_dB_10log10 = " << (s.omega_dB_10log10 ? "true" : "false") << "\n"
       << "M = " << s.M << "\n"
       << "N = " << s.N << "\n"
       << "W = " << s.W << "\n"
       << "R = " << s.R << "\n"
       << "alpha = " << s.alpha << "\n"
       << "eps1 = " << s.eps1 << "\n"
       << "eps2 = " << s.eps2 << "\n"
       << "eps3 = " << s.eps3 << "\n"
       << "sigma_k2_dBm = " << s.sigma_k2_dBm << "\n"
       << "sigma_r2_dBm = " << s.sigma_r2_dBm << "\n"
       << "d0 = " << s.d0 << "\n"
       << "bs_pos = " << s.bs_pos.x << ", " << s.bs_pos.y << "\n"
       << "ris_pos = " << s.ris_pos.x << ", " << s.ris_pos.y << "\n"
       << "rx_pos = " << s.rx_pos.x << ", " << s.rx_pos.y << "\n"
       << "lambda_th = " << cfg.analytic.lambda_th << "\n"
       << "mu = " << cfg.analytic.mu << "\n"
       << "u = " << cfg.quad.u << "\n"
       << "h_gauss = " << cfg.quad.h_gauss << "\n"
       << "h_chi = " << cfg.quad.h_chi << "\n"
       << "trials = " << cfg.mc.trials << "\n"
       << "seed = " << cfg.mc.seed << "\n"
       << "shards = " << cfg.mc.shards << "\n";
    return os.str();
}

} // namespace fasaris
