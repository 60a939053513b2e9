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

#include <array>
#include <cstdint>
#include <limits>
#include <span>

namespace fasaris {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

// Random stream of one Monte Carlo shard.
//
// Mapping: key = (seed & 0xffffffff, seed >> 32); block i of shard s uses the counter
// (i & 0xffffffff, i >> 32, s & 0xffffffff, s >> 32). Shards therefore own disjoint
// counter ranges and can never overlap, whatever their length.
class ShardStream {
public:
    using result_type = std::uint64_t;

    ShardStream(std::uint64_t seed, std::uint64_t shard);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();

    // Uniform doubles in (0, 1] with 53 random bits.
    double uniform() { return to_unit((*this)()); }
    void fill_uniform(std::span<double> out);

    static double to_unit(std::uint64_t bits)
    {
        return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
    }

private:
    void refill();

    PhiloxKey key_;
    std::uint64_t shard_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int available_ = 0;
};

} // namespace fasaris
