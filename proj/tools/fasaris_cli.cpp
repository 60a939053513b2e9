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

#include "fasaris/analytic_op.hpp"
#include "fasaris/config_io.hpp"
#include "fasaris/correlation.hpp"
#include "fasaris/errors.hpp"
#include "fasaris/plot.hpp"
#include "fasaris/simd/kernels.hpp"
#include "fasaris/sweep.hpp"
#include "fasaris/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace fasaris;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kConfig = 2, kNumerical = 3, kOutput = 4, kCsv = 5 };

struct CommonFlags {
    std::string config_path;
    std::vector<std::string> settings; // key=value
    std::int64_t trials = -1;
    std::int64_t seed = -1;
    int shards = -1;
    int u = -1;
};

void add_common(CLI::App* app, CommonFlags& f, bool config_positional = true)
{
    if (config_positional)
        app->add_option("config", f.config_path, "Configuration file (key = value lines); defaults when omitted");
    app->add_option("--set", f.settings, "Override a configuration key, e.g. --set P_dBm=20 (repeatable)");
    app->add_option("--trials", f.trials, "Monte Carlo trials");
    app->add_option("--seed", f.seed, "Monte Carlo seed");
    app->add_option("--shards", f.shards, "Monte Carlo substreams");
    app->add_option("--u", f.u, "Quadrature nodes per panel");
}

// Precedence: built-in defaults < config file < --set < dedicated flags.
RunConfig resolve(const CommonFlags& f, RunConfig base = {})
{
    RunConfig cfg = f.config_path.empty() ? base : load_config(f.config_path, base);
    for (const auto& s : f.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + s + "'");
        apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    if (f.trials >= 0)
        cfg.mc.trials = static_cast<std::uint64_t>(f.trials);
    if (f.seed >= 0)
        cfg.mc.seed = static_cast<std::uint64_t>(f.seed);
    if (f.shards >= 0)
        cfg.mc.shards = f.shards;
    if (f.u >= 0)
        cfg.quad.u = f.u;
    cfg.validate();
    return cfg;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names)
{
    std::vector<Method> out;
    for (const auto& n : names) {
        std::stringstream ss(n);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(parse_method(item));
    }
    return out;
}

std::vector<double> parse_values(const std::string& values, const std::string& range)
{
    if (!range.empty()) {
        double a = 0.0, b = 0.0, c = 0.0;
        char x = 0, y = 0;
        std::istringstream is(range);
        if (!(is >> a >> x >> b >> y >> c) || x != ':' || y != ':')
            throw ConfigError("--range expects start:stop:step", "values");
        return expand_range(a, b, c);
    }
    std::vector<double> out;
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("--values: cannot parse '" + item + "'", "values");
            }
        }
    return out;
}

void print_results(const std::vector<OutageResult>& results)
{
    std::printf("%-14s %-24s %-24s %-10s %s\n", "method", "op", "diagnostic", "trials", "runtime_ms");
    for (const auto& r : results)
        std::printf("%-14s %-24.16e %-24.16e %-10llu %.3f\n", std::string(method_name(r.method)).c_str(), r.op,
                    r.diagnostic, static_cast<unsigned long long>(r.trials), r.runtime_ms);
}

// Figure defaults; presets differ only in the swept variable.
RunConfig preset_base(std::uint64_t trials)
{
    RunConfig cfg;
    cfg.mc.trials = trials;
    cfg.mc.shards = 8;
    return cfg;
}

struct PresetOut {
    fs::path csv;
    std::vector<SweepRow> rows;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Outage probability of fluid-antenna receivers behind an active RIS"};
    app.require_subcommand(1);

    CommonFlags op_flags;
    std::vector<std::string> op_methods{"bc_analytic,iid_analytic,monte_carlo"};
    std::string op_scenario = "fas_aris";
    auto* op = app.add_subcommand("op", "Evaluate a single operating point with each method");
    add_common(op, op_flags);
    op->add_option("--methods", op_methods, "Comma-separated: bc_analytic, iid_analytic, monte_carlo");
    op->add_option("--scenario", op_scenario, "fas_aris | fas_ris | no_ris | no_fas | no_fas_no_ris");

    CommonFlags sw_flags;
    std::string sw_var = "P_dBm", sw_values, sw_range, sw_out, sw_scenario = "fas_aris";
    std::vector<std::string> sw_methods{"bc_analytic,iid_analytic,monte_carlo"};
    bool sw_no_timing = false;
    auto* sweep = app.add_subcommand("sweep", "Sweep one variable and write a CSV");
    add_common(sweep, sw_flags);
    sweep->add_option("--var", sw_var, "P_dBm | omega_dB | M | N | W | R");
    sweep->add_option("--values", sw_values, "Comma-separated values");
    sweep->add_option("--range", sw_range, "start:stop:step (inclusive)");
    sweep->add_option("--methods", sw_methods, "Comma-separated methods");
    sweep->add_option("--scenario", sw_scenario, "Comparison scenario");
    sweep->add_option("--out", sw_out, "Output CSV path")->required();
    sweep->add_flag("--no-timing", sw_no_timing, "Write runtime_ms as 0 (byte-identical reruns)");

    std::string preset_name, preset_dir = ".";
    std::int64_t preset_trials = 100000;
    bool preset_plot = false, preset_no_timing = false;
    int preset_u = -1;
    auto* preset = app.add_subcommand("preset", "Reproduce a figure sweep: fig1 | fig2 | fig3");
    preset->add_option("name", preset_name, "fig1 | fig2 | fig3")->required()->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    preset->add_option("--out-dir", preset_dir, "Directory for CSV/SVG output");
    preset->add_option("--trials", preset_trials, "Monte Carlo trials per point");
    preset->add_option("--u", preset_u, "Quadrature nodes per panel");
    preset->add_flag("--plot", preset_plot, "Also render an SVG per preset");
    preset->add_flag("--no-timing", preset_no_timing, "Write runtime_ms as 0");

    CommonFlags fit_flags;
    auto* fit = app.add_subcommand("fit-blocks", "Fit the block-correlation partition and print it as CSV");
    add_common(fit, fit_flags);

    CommonFlags val_flags;
    auto* val = app.add_subcommand("validate", "Run the reduced-scale invariant suite");
    add_common(val, val_flags);

    std::vector<std::string> plot_inputs;
    std::string plot_out;
    auto* plot = app.add_subcommand("plot", "Render sweep CSVs as an SVG (log-scale OP)");
    plot->add_option("csv", plot_inputs, "Sweep CSV files")->required();
    plot->add_option("--out", plot_out, "Output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*op) {
            const RunConfig cfg = resolve(op_flags);
            const auto results = run_point(cfg, parse_methods(op_methods), parse_scenario(op_scenario));
            print_results(results);
            return kOk;
        }
        if (*sweep) {
            const RunConfig cfg = resolve(sw_flags);
            SweepSpec spec;
            spec.variable = parse_variable(sw_var);
            spec.values = parse_values(sw_values, sw_range);
            spec.methods = parse_methods(sw_methods);
            spec.scenario = parse_scenario(sw_scenario);
            spec.mc = cfg.mc;
            spec.quad = cfg.quad;
            spec.analytic = cfg.analytic;
            const auto rows = run_sweep(cfg.system, spec);
            write_csv(fs::path(sw_out), rows, !sw_no_timing);
            std::printf("wrote %zu rows to %s\n", rows.size(), sw_out.c_str());
            return kOk;
        }
        if (*preset) {
            std::error_code ec;
            fs::create_directories(preset_dir, ec);
            RunConfig base = preset_base(static_cast<std::uint64_t>(preset_trials));
            if (preset_u > 0)
                base.quad.u = preset_u;
            base.validate();

            auto run = [&](const std::string& stem, SystemConfig sys, SweepVariable var, std::vector<double> values,
                           Scenario scenario) {
                SweepSpec spec;
                spec.variable = var;
                spec.values = std::move(values);
                spec.scenario = scenario;
                spec.mc = base.mc;
                spec.quad = base.quad;
                spec.analytic = base.analytic;
                const auto rows = run_sweep(sys, spec);
                const fs::path csv = fs::path(preset_dir) / (stem + ".csv");
                write_csv(csv, rows, !preset_no_timing);
                std::printf("wrote %s\n", csv.string().c_str());
                return csv;
            };

            std::vector<fs::path> csvs;
            if (preset_name == "fig1") {
                for (double w : {0.0, 5.0}) {
                    SystemConfig sys = base.system;
                    sys.omega_dB = w;
                    csvs.push_back(run("fig1_omega" + std::to_string(static_cast<int>(w)) + "dB", sys,
                                       SweepVariable::P_dBm, expand_range(0.0, 30.0, 2.0), Scenario::fas_aris));
                }
                csvs.push_back(run("fig1_fas_ris", base.system, SweepVariable::P_dBm, expand_range(0.0, 30.0, 2.0),
                                   Scenario::fas_ris));
            } else if (preset_name == "fig2") {
                for (int n : {5, 20}) {
                    SystemConfig sys = base.system;
                    sys.P_dBm = 10.0;
                    sys.omega_dB = 5.0;
                    sys.N = n;
                    csvs.push_back(run("fig2_N" + std::to_string(n), sys, SweepVariable::M,
                                       expand_range(16.0, 128.0, 16.0), Scenario::fas_aris));
                }
            } else {
                for (Scenario s : {Scenario::fas_aris, Scenario::fas_ris, Scenario::no_ris, Scenario::no_fas,
                                   Scenario::no_fas_no_ris})
                    csvs.push_back(run("fig3_" + std::string(scenario_name(s)), base.system, SweepVariable::P_dBm,
                                       expand_range(0.0, 30.0, 2.0), s));
            }
            if (preset_plot) {
                const fs::path svg = fs::path(preset_dir) / (preset_name + ".svg");
                emit_plot(csvs, svg);
                std::printf("wrote %s\n", svg.string().c_str());
            }
            return kOk;
        }
        if (*fit) {
            const RunConfig cfg = resolve(fit_flags);
            const CorrelationMatrix sigma = build_sigma(cfg.system.N, cfg.system.W);
            const BlockPartition part = fit_block_partition(sigma, cfg.analytic.lambda_th, cfg.analytic.mu);
            std::printf("# N=%d W=%.17e mu=%.17e lambda_th=%.17e B=%d fit_distance=%.17e\n", cfg.system.N,
                        cfg.system.W, part.mu, part.lambda_th, part.block_count(), part.fit_distance);
            std::printf("block,size,eigenvalue\n");
            for (int b = 0; b < part.block_count(); ++b)
                std::printf("%d,%d,%.17e\n", b + 1, part.block_sizes[static_cast<std::size_t>(b)],
                            sigma.eigenvalues()(b));
            return kOk;
        }
        if (*val) {
            RunConfig cfg;
            try {
                cfg = resolve(val_flags);
            } catch (const ConfigError& e) {
                std::printf("FAIL configuration: %s\n", e.what());
                return kCheckFailed;
            }
            const auto checks = validate_config(cfg);
            bool ok = true;
            for (const auto& c : checks) {
                std::printf("%s %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
                ok = ok && c.passed;
            }
            std::printf("simd: %s\n", std::string(simd::isa_name(simd::active_isa())).c_str());
            return ok ? kOk : kCheckFailed;
        }
        if (*plot) {
            std::vector<fs::path> inputs(plot_inputs.begin(), plot_inputs.end());
            emit_plot(inputs, plot_out);
            std::printf("wrote %s\n", plot_out.c_str());
            return kOk;
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kConfig;
    } catch (const CsvError& e) {
        std::fprintf(stderr, "malformed CSV (line %zu): %s\n", e.line(), e.what());
        return kCsv;
    } catch (const OutputError& e) {
        std::fprintf(stderr, "output error: %s\n", e.what());
        return kOutput;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kNumerical;
    } catch (const ModelError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kNumerical;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kNumerical;
    }
    return kOk;
}
