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

// Data-parallel inner loops used by the Monte Carlo simulator and the quadrature
// pipeline. Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant; the variant is chosen once at first use (see `active_isa`).
//
// Set FASARIS_SIMD=scalar (or avx2) in the environment to force a variant.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace fasaris::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Arguments of one Gaussian-weighted panel of a Chebyshev rule:
//   sum_i w_i * exp(-x_i^2 * inv_two_var) * Phi(x_i)^power[j],   x_i = mid + half * p_i
//   Phi(x) = 0.5 * erfc(-(shift - slope * x) * inv_scale)
// The caller applies `half` and the Gaussian normalization.
struct PhiPanel {
    const double* nodes = nullptr;   // Chebyshev nodes p_i in (-1, 1)
    const double* weights = nullptr; // rule weights
    std::size_t n = 0;
    double mid = 0.0;
    double half = 0.0;
    double inv_two_var = 0.0; // 0 disables the Gaussian factor
    double shift = 0.0;
    double slope = 0.0;
    double inv_scale = 0.0;
};

struct KernelTable {
    Isa isa;

    // y += a * x
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    // sum_i w_i * sqrt(re_i^2 + im_i^2)
    double (*weighted_modulus_sum)(const double* w, const double* re, const double* im, std::size_t n);

    // out_i = scale * sqrt(re_i^2 + im_i^2)
    void (*modulus)(const double* re, const double* im, double scale, double* out, std::size_t n);

    // Box-Muller on `pairs` uniform pairs in (0, 1]: u1 = u[0..pairs), u2 = u[pairs..2 pairs).
    // Writes r cos(2 pi u2) to out[0..pairs) and r sin(2 pi u2) to out[pairs..2 pairs).
    void (*box_muller)(const double* u, double* out, std::size_t pairs);

    // out[j] = sum over the panel with exponent powers[j] (powers >= 0).
    void (*phi_power_panel)(const PhiPanel& panel, const int* powers, double* out, std::size_t n_powers);

    // Philox4x32-10 blocks block0 .. block0+blocks-1 of stream (key, shard), two uniforms
    // in (0, 1] per block, in stream order (see ShardStream).
    void (*philox_uniform)(std::uint32_t key0, std::uint32_t key1, std::uint64_t shard, std::uint64_t block0,
                           double* out, std::size_t blocks);
};

const KernelTable& scalar_kernels();
#if defined(FASARIS_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

bool isa_supported(Isa isa);
const KernelTable& kernels_for(Isa isa); // throws std::invalid_argument when unsupported
Isa active_isa();
const KernelTable& kernels();

// Integer power by repeated squaring; shared by every variant.
inline double ipow(double x, int p)
{
    double r = 1.0;
    while (p > 0) {
        if (p & 1)
            r *= x;
        x *= x;
        p >>= 1;
    }
    return r;
}

} // namespace fasaris::simd
