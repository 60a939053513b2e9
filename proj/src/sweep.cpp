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

#include "fasaris/sweep.hpp"

#include "fasaris/errors.hpp"
#include "fasaris/parallel.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace fasaris {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool budget_only(SweepVariable v)
{
    return v == SweepVariable::P_dBm || v == SweepVariable::omega_dB || v == SweepVariable::R;
}

OutageResult analytic_point(const SystemConfig& cfg, Method method, Scenario scenario, const QuadratureSpec& quad,
                            const AnalyticOptions& opt)
{
    const ScenarioSetup setup = scenario_setup(cfg, scenario);
    if (setup.reflected)
        return outage_probability(setup.cfg, method, quad, opt);
    const auto start = Clock::now();
    OutageResult r;
    r.method = method;
    r.op = direct_link_outage(link_budget(setup.cfg), setup.cfg.eps3);
    r.runtime_ms = elapsed_ms(start);
    return r;
}

OutageResult mc_result(const McEstimate& e, double runtime_ms)
{
    OutageResult r;
    r.method = Method::monte_carlo;
    r.op = e.op_hat;
    r.diagnostic = e.ci_half_width;
    r.trials = e.trials;
    r.runtime_ms = runtime_ms;
    return r;
}

} // namespace

std::string_view variable_name(SweepVariable v)
{
    switch (v) {
    case SweepVariable::P_dBm:
        return "P_dBm";
    case SweepVariable::omega_dB:
        return "omega_dB";
    case SweepVariable::M:
        return "M";
    case SweepVariable::N:
        return "N";
    case SweepVariable::W:
        return "W";
    case SweepVariable::R:
        return "R";
    }
    return "unknown";
}

SweepVariable parse_variable(std::string_view name)
{
    for (auto v : {SweepVariable::P_dBm, SweepVariable::omega_dB, SweepVariable::M, SweepVariable::N,
                   SweepVariable::W, SweepVariable::R})
        if (variable_name(v) == name)
            return v;
    throw ConfigError("variable: unknown sweep variable '" + std::string(name)
                          + "' (expected P_dBm, omega_dB, M, N, W or R)",
                      "variable");
}

SystemConfig with_variable(const SystemConfig& cfg, SweepVariable v, double value)
{
    SystemConfig out = cfg;
    switch (v) {
    case SweepVariable::P_dBm:
        out.P_dBm = value;
        break;
    case SweepVariable::omega_dB:
        out.omega_dB = value;
        break;
    case SweepVariable::M:
        out.M = static_cast<int>(std::lround(value));
        break;
    case SweepVariable::N:
        out.N = static_cast<int>(std::lround(value));
        break;
    case SweepVariable::W:
        out.W = value;
        break;
    case SweepVariable::R:
        out.R = value;
        break;
    }
    return out;
}

std::vector<double> expand_range(double start, double stop, double step)
{
    if (!(step != 0.0) || !std::isfinite(step) || (stop - start) / step < 0.0)
        throw ConfigError("values: range step must move from start towards stop", "values");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000)
        throw ConfigError("values: range expands to too many points", "values");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        out.push_back(start + static_cast<double>(i) * step);
    return out;
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw ConfigError("values: sweep needs at least one value", "values");
    if (methods.empty())
        throw ConfigError("methods: sweep needs at least one method", "methods");
    mc.validate();
    quad.validate();
}

std::vector<SweepRow> run_sweep(const SystemConfig& base, const SweepSpec& spec)
{
    spec.validate();
    const std::size_t nv = spec.values.size();
    std::vector<SystemConfig> configs;
    configs.reserve(nv);
    for (double v : spec.values) {
        configs.push_back(with_variable(base, spec.variable, v));
        configs.back().validate();
    }

    std::vector<Method> analytic;
    bool with_mc = false;
    for (Method m : spec.methods) {
        if (m == Method::monte_carlo)
            with_mc = true;
        else
            analytic.push_back(m);
    }

    // results[value][method index in spec.methods]
    std::vector<std::vector<OutageResult>> results(nv, std::vector<OutageResult>(spec.methods.size()));
    auto slot_of = [&](Method m) {
        for (std::size_t i = 0; i < spec.methods.size(); ++i)
            if (spec.methods[i] == m)
                return i;
        return spec.methods.size();
    };

    const std::size_t tasks = nv * analytic.size();
    parallel_for(tasks, [&](std::size_t t) {
        const std::size_t vi = t / analytic.size();
        const Method m = analytic[t % analytic.size()];
        results[vi][slot_of(m)] = analytic_point(configs[vi], m, spec.scenario, spec.quad, spec.analytic);
    });

    if (with_mc) {
        const std::size_t mc_slot = slot_of(Method::monte_carlo);
        if (budget_only(spec.variable)) {
            const auto start = Clock::now();
            std::vector<LinkBudget> budgets;
            budgets.reserve(nv);
            for (const auto& c : configs)
                budgets.push_back(link_budget(scenario_setup(c, spec.scenario).cfg));
            const ScenarioSetup setup = scenario_setup(configs.front(), spec.scenario);
            const auto est = simulate_op_batch(setup.cfg, budgets, spec.mc, setup.reflected);
            const double per_point = elapsed_ms(start) / static_cast<double>(nv);
            for (std::size_t vi = 0; vi < nv; ++vi)
                results[vi][mc_slot] = mc_result(est[vi], per_point);
        } else {
            for (std::size_t vi = 0; vi < nv; ++vi) {
                const auto start = Clock::now();
                const McEstimate est = simulate_baselines(configs[vi], spec.mc, spec.scenario);
                results[vi][mc_slot] = mc_result(est, elapsed_ms(start));
            }
        }
    }

    // Method order is the enum order regardless of how the methods were listed.
    std::vector<SweepRow> rows;
    rows.reserve(nv * spec.methods.size());
    for (std::size_t vi = 0; vi < nv; ++vi) {
        for (Method m : {Method::bc_analytic, Method::iid_analytic, Method::monte_carlo}) {
            const std::size_t slot = slot_of(m);
            if (slot == spec.methods.size())
                continue;
            const OutageResult& r = results[vi][slot];
            SweepRow row;
            row.variable = spec.variable;
            row.value = spec.values[vi];
            row.method = m;
            row.op = r.op;
            if (m == Method::monte_carlo)
                row.ci_half_width = r.diagnostic;
            else
                row.diag_residual = r.diagnostic;
            row.trials = r.trials;
            row.runtime_ms = r.runtime_ms;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<OutageResult> run_point(const RunConfig& cfg, const std::vector<Method>& methods, Scenario scenario)
{
    cfg.validate();
    if (methods.empty())
        throw ConfigError("methods: at least one method is required", "methods");
    std::vector<OutageResult> out;
    for (Method m : methods) {
        if (m == Method::monte_carlo) {
            const auto start = Clock::now();
            const McEstimate e = simulate_baselines(cfg.system, cfg.mc, scenario);
            out.push_back(mc_result(e, elapsed_ms(start)));
        } else {
            out.push_back(analytic_point(cfg.system, m, scenario, cfg.quad, cfg.analytic));
        }
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_timing)
{
    os << kCsvHeader << '\n';
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.17e,%s,%.17e,%.17e,%.17e,%llu,%.17e\n",
                      std::string(variable_name(r.variable)).c_str(), r.value, std::string(method_name(r.method)).c_str(),
                      r.op, r.ci_half_width, r.diag_residual, static_cast<unsigned long long>(r.trials),
                      with_timing ? r.runtime_ms : 0.0);
        os << buf;
    }
}

void write_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows, bool with_timing)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputError("cannot open '" + path.string() + "' for writing");
    write_csv(out, rows, with_timing);
    out.flush();
    if (!out)
        throw OutputError("failed writing '" + path.string() + "'");
}

} // namespace fasaris
