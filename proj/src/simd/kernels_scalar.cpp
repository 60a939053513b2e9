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

#include "fasaris/simd/kernels.hpp"

#include "fasaris/rng.hpp"

#include <cmath>
#include <numbers>

namespace fasaris::simd {

namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

double weighted_modulus_sum_scalar(const double* w, const double* re, const double* im, std::size_t n)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += w[i] * std::sqrt(re[i] * re[i] + im[i] * im[i]);
    return acc;
}

void modulus_scalar(const double* re, const double* im, double scale, double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        out[i] = scale * std::sqrt(re[i] * re[i] + im[i] * im[i]);
}

void box_muller_scalar(const double* u, double* out, std::size_t pairs)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < pairs; ++i) {
        const double r = std::sqrt(-2.0 * std::log(u[i]));
        const double a = two_pi * u[pairs + i];
        out[i] = r * std::cos(a);
        out[pairs + i] = r * std::sin(a);
    }
}

void phi_power_panel_scalar(const PhiPanel& p, const int* powers, double* out, std::size_t n_powers)
{
    for (std::size_t j = 0; j < n_powers; ++j)
        out[j] = 0.0;
    for (std::size_t i = 0; i < p.n; ++i) {
        const double x = p.mid + p.half * p.nodes[i];
        const double g = p.weights[i] * std::exp(-x * x * p.inv_two_var);
        const double phi = 0.5 * std::erfc(-(p.shift - p.slope * x) * p.inv_scale);
        for (std::size_t j = 0; j < n_powers; ++j)
            out[j] += g * ipow(phi, powers[j]);
    }
}

void philox_uniform_scalar(std::uint32_t key0, std::uint32_t key1, std::uint64_t shard, std::uint64_t block0,
                           double* out, std::size_t blocks)
{
    const auto s0 = static_cast<std::uint32_t>(shard);
    const auto s1 = static_cast<std::uint32_t>(shard >> 32);
    for (std::size_t i = 0; i < blocks; ++i) {
        const std::uint64_t b = block0 + i;
        const PhiloxCounter w =
            philox4x32_10({static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32), s0, s1}, {key0, key1});
        out[2 * i] = ShardStream::to_unit((static_cast<std::uint64_t>(w[1]) << 32) | w[0]);
        out[2 * i + 1] = ShardStream::to_unit((static_cast<std::uint64_t>(w[3]) << 32) | w[2]);
    }
}

} // namespace

const KernelTable& scalar_kernels()
{
    static const KernelTable table{
        Isa::scalar,
        axpy_scalar,
        weighted_modulus_sum_scalar,
        modulus_scalar,
        box_muller_scalar,
        phi_power_panel_scalar,
        philox_uniform_scalar,
    };
    return table;
}

} // namespace fasaris::simd
