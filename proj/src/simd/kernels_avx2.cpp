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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "fasaris/simd/kernels.hpp"

#include "fasaris/rng.hpp"

#include <immintrin.h>

#include <cmath>
#include <numbers>

// glibc libmvec, AVX2 ABI ('d' = 256-bit, 4 lanes).
extern "C" {
__m256d _ZGVdN4v_log(__m256d);
__m256d _ZGVdN4v_sin(__m256d);
__m256d _ZGVdN4v_cos(__m256d);
__m256d _ZGVdN4v_exp(__m256d);
__m256d _ZGVdN4v_erfc(__m256d);
}

namespace fasaris::simd {

namespace {

double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n)
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i)
        y[i] += a * x[i];
}

double weighted_modulus_sum_avx2(const double* w, const double* re, const double* im, std::size_t n)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d q = _mm256_loadu_pd(im + i);
        const __m256d mag = _mm256_sqrt_pd(_mm256_fmadd_pd(r, r, _mm256_mul_pd(q, q)));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), mag, acc);
    }
    double tail = 0.0;
    for (; i < n; ++i)
        tail += w[i] * std::sqrt(re[i] * re[i] + im[i] * im[i]);
    return hsum(acc) + tail;
}

void modulus_avx2(const double* re, const double* im, double scale, double* out, std::size_t n)
{
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d q = _mm256_loadu_pd(im + i);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(s, _mm256_sqrt_pd(_mm256_fmadd_pd(r, r, _mm256_mul_pd(q, q)))));
    }
    for (; i < n; ++i)
        out[i] = scale * std::sqrt(re[i] * re[i] + im[i] * im[i]);
}

void box_muller_avx2(const double* u, double* out, std::size_t pairs)
{
    const __m256d minus_two = _mm256_set1_pd(-2.0);
    const __m256d two_pi = _mm256_set1_pd(2.0 * std::numbers::pi);
    std::size_t i = 0;
    for (; i + 4 <= pairs; i += 4) {
        const __m256d r = _mm256_sqrt_pd(_mm256_mul_pd(minus_two, _ZGVdN4v_log(_mm256_loadu_pd(u + i))));
        const __m256d a = _mm256_mul_pd(two_pi, _mm256_loadu_pd(u + pairs + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(r, _ZGVdN4v_cos(a)));
        _mm256_storeu_pd(out + pairs + i, _mm256_mul_pd(r, _ZGVdN4v_sin(a)));
    }
    for (; i < pairs; ++i) {
        const double r = std::sqrt(-2.0 * std::log(u[i]));
        const double a = 2.0 * std::numbers::pi * u[pairs + i];
        out[i] = r * std::cos(a);
        out[pairs + i] = r * std::sin(a);
    }
}

__m256d ipow_avx2(__m256d x, int p)
{
    __m256d r = _mm256_set1_pd(1.0);
    while (p > 0) {
        if (p & 1)
            r = _mm256_mul_pd(r, x);
        x = _mm256_mul_pd(x, x);
        p >>= 1;
    }
    return r;
}

constexpr std::size_t kMaxPowers = 64;

void phi_power_panel_avx2(const PhiPanel& p, const int* powers, double* out, std::size_t n_powers)
{
    if (n_powers > kMaxPowers) {
        scalar_kernels().phi_power_panel(p, powers, out, n_powers);
        return;
    }
    __m256d acc[kMaxPowers];
    for (std::size_t j = 0; j < n_powers; ++j)
        acc[j] = _mm256_setzero_pd();

    const __m256d mid = _mm256_set1_pd(p.mid);
    const __m256d half = _mm256_set1_pd(p.half);
    const __m256d neg_inv_two_var = _mm256_set1_pd(-p.inv_two_var);
    const __m256d shift = _mm256_set1_pd(p.shift);
    const __m256d slope = _mm256_set1_pd(p.slope);
    const __m256d neg_inv_scale = _mm256_set1_pd(-p.inv_scale);
    const __m256d one_half = _mm256_set1_pd(0.5);

    auto step = [&](__m256d nodes, __m256d weights) {
        const __m256d x = _mm256_fmadd_pd(half, nodes, mid);
        const __m256d g = _mm256_mul_pd(weights, _ZGVdN4v_exp(_mm256_mul_pd(_mm256_mul_pd(x, x), neg_inv_two_var)));
        const __m256d arg = _mm256_mul_pd(_mm256_fnmadd_pd(slope, x, shift), neg_inv_scale);
        const __m256d phi = _mm256_mul_pd(one_half, _ZGVdN4v_erfc(arg));
        for (std::size_t j = 0; j < n_powers; ++j)
            acc[j] = _mm256_fmadd_pd(g, ipow_avx2(phi, powers[j]), acc[j]);
    };

    std::size_t i = 0;
    for (; i + 4 <= p.n; i += 4)
        step(_mm256_loadu_pd(p.nodes + i), _mm256_loadu_pd(p.weights + i));
    if (i < p.n) {
        alignas(32) double nodes[4] = {0.0, 0.0, 0.0, 0.0};
        alignas(32) double weights[4] = {0.0, 0.0, 0.0, 0.0};
        for (std::size_t k = 0; i + k < p.n; ++k) {
            nodes[k] = p.nodes[i + k];
            weights[k] = p.weights[i + k];
        }
        step(_mm256_load_pd(nodes), _mm256_load_pd(weights));
    }
    for (std::size_t j = 0; j < n_powers; ++j)
        out[j] = hsum(acc[j]);
}

// Eight blocks per iteration, one per 32-bit lane.
inline void mulhilo8(__m256i a, __m256i m, __m256i& hi, __m256i& lo)
{
    const __m256i even = _mm256_mul_epu32(a, m);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), m);
    lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
    hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

inline __m256d u32_to_pd(__m128i x)
{
    const __m128i flipped = _mm_xor_si128(x, _mm_set1_epi32(static_cast<int>(0x80000000u)));
    return _mm256_add_pd(_mm256_cvtepi32_pd(flipped), _mm256_set1_pd(2147483648.0));
}

inline __m256d to_unit4(__m128i hi, __m128i lo)
{
    const __m256d h = _mm256_mul_pd(u32_to_pd(hi), _mm256_set1_pd(2097152.0));
    const __m256d l = _mm256_cvtepi32_pd(_mm_srli_epi32(lo, 11));
    return _mm256_mul_pd(_mm256_add_pd(_mm256_add_pd(h, l), _mm256_set1_pd(1.0)), _mm256_set1_pd(0x1.0p-53));
}

// [a0 b0 a1 b1 a2 b2 a3 b3]
inline void interleave_store(__m256d a, __m256d b, double* out)
{
    const __m256d lo = _mm256_unpacklo_pd(a, b);
    const __m256d hi = _mm256_unpackhi_pd(a, b);
    _mm256_storeu_pd(out, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(out + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
}

void philox_uniform_avx2(std::uint32_t key0, std::uint32_t key1, std::uint64_t shard, std::uint64_t block0,
                         double* out, std::size_t blocks)
{
    const __m256i m0 = _mm256_set1_epi32(static_cast<int>(0xD2511F53u));
    const __m256i m1 = _mm256_set1_epi32(static_cast<int>(0xCD9E8D57u));
    const __m256i s0 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(shard)));
    const __m256i s1 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(shard >> 32)));
    alignas(32) std::uint32_t lo_words[8], hi_words[8];
    const __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    std::size_t i = 0;
    for (; i + 8 <= blocks; i += 8) {
        const std::uint64_t b = block0 + i;
        const auto b_lo = static_cast<std::uint32_t>(b);
        __m256i c0, c1;
        if (b_lo <= 0xFFFFFFF7u) {
            c0 = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(b_lo)), iota);
            c1 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(b >> 32)));
        } else {
            for (int l = 0; l < 8; ++l) {
                lo_words[l] = static_cast<std::uint32_t>(b + static_cast<std::uint64_t>(l));
                hi_words[l] = static_cast<std::uint32_t>((b + static_cast<std::uint64_t>(l)) >> 32);
            }
            c0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(lo_words));
            c1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(hi_words));
        }
        __m256i c2 = s0, c3 = s1;
        std::uint32_t k0 = key0, k1 = key1;
        for (int round = 0; round < 10; ++round) {
            __m256i hi0, lo0, hi1, lo1;
            mulhilo8(c0, m0, hi0, lo0);
            mulhilo8(c2, m1, hi1, lo1);
            const __m256i kv0 = _mm256_set1_epi32(static_cast<int>(k0));
            const __m256i kv1 = _mm256_set1_epi32(static_cast<int>(k1));
            c0 = _mm256_xor_si256(_mm256_xor_si256(hi1, c1), kv0);
            c1 = lo1;
            c2 = _mm256_xor_si256(_mm256_xor_si256(hi0, c3), kv1);
            c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        // ((hi << 21) + (lo >> 11) + 1) * 2^-53, exact in double.
        const __m256d a_lo = to_unit4(_mm256_castsi256_si128(c1), _mm256_castsi256_si128(c0));
        const __m256d a_hi = to_unit4(_mm256_extracti128_si256(c1, 1), _mm256_extracti128_si256(c0, 1));
        const __m256d b_lo4 = to_unit4(_mm256_castsi256_si128(c3), _mm256_castsi256_si128(c2));
        const __m256d b_hi4 = to_unit4(_mm256_extracti128_si256(c3, 1), _mm256_extracti128_si256(c2, 1));
        double* o = out + 2 * i;
        interleave_store(a_lo, b_lo4, o);
        interleave_store(a_hi, b_hi4, o + 8);
    }
    for (; i < blocks; ++i) {
        const std::uint64_t b = block0 + i;
        const PhiloxCounter t = philox4x32_10(
            {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32), static_cast<std::uint32_t>(shard),
             static_cast<std::uint32_t>(shard >> 32)},
            {key0, key1});
        out[2 * i] = ShardStream::to_unit((static_cast<std::uint64_t>(t[1]) << 32) | t[0]);
        out[2 * i + 1] = ShardStream::to_unit((static_cast<std::uint64_t>(t[3]) << 32) | t[2]);
    }
}

} // namespace

const KernelTable& avx2_kernels()
{
    static const KernelTable table{
        Isa::avx2,
        axpy_avx2,
        weighted_modulus_sum_avx2,
        modulus_avx2,
        box_muller_avx2,
        phi_power_panel_avx2,
        philox_uniform_avx2,
    };
    return table;
}

} // namespace fasaris::simd
