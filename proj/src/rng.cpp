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

#include "fasaris/rng.hpp"

#include "fasaris/simd/kernels.hpp"

namespace fasaris {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

} // namespace

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key)
{
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

ShardStream::ShardStream(std::uint64_t seed, std::uint64_t shard)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, shard_(shard)
{
}

void ShardStream::refill()
{
    const PhiloxCounter out = philox4x32_10(
        {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
         static_cast<std::uint32_t>(shard_), static_cast<std::uint32_t>(shard_ >> 32)},
        key_);
    ++block_;
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    available_ = 2;
}

ShardStream::result_type ShardStream::operator()()
{
    if (available_ == 0)
        refill();
    return buffer_[static_cast<std::size_t>(2 - available_--)];
}

void ShardStream::fill_uniform(std::span<double> out)
{
    std::size_t i = 0;
    while (available_ > 0 && i < out.size())
        out[i++] = uniform();
    const std::size_t blocks = (out.size() - i) / 2;
    if (blocks > 0) {
        simd::kernels().philox_uniform(key_[0], key_[1], shard_, block_, out.data() + i, blocks);
        block_ += blocks;
        i += 2 * blocks;
    }
    while (i < out.size())
        out[i++] = uniform();
}

} // namespace fasaris
