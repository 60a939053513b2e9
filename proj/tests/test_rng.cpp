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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace fasaris;

TEST(Philox, KnownAnswers)
{
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}), (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(ShardStream, StreamMapping)
{
    const std::uint64_t seed = 0x0123456789abcdefULL;
    ShardStream s(seed, 5);
    for (std::uint64_t block = 0; block < 4; ++block) {
        const PhiloxCounter w = philox4x32_10({static_cast<std::uint32_t>(block), 0, 5, 0}, {0x89abcdef, 0x01234567});
        EXPECT_EQ(s(), (static_cast<std::uint64_t>(w[1]) << 32) | w[0]);
        EXPECT_EQ(s(), (static_cast<std::uint64_t>(w[3]) << 32) | w[2]);
    }
}

TEST(ShardStream, FillMatchesSequentialDraws)
{
    ShardStream a(9, 2), b(9, 2);
    a.uniform(); // misalign the buffer
    b.uniform();
    std::vector<double> bulk(101);
    a.fill_uniform(bulk);
    for (double v : bulk)
        EXPECT_EQ(v, b.uniform());
    EXPECT_EQ(a.uniform(), b.uniform());
}

TEST(ShardStream, UnitInterval)
{
    EXPECT_EQ(ShardStream::to_unit(0), 0x1.0p-53);
    EXPECT_EQ(ShardStream::to_unit(~0ULL), 1.0);
    ShardStream s(1, 0);
    std::vector<double> u(100000);
    s.fill_uniform(u);
    double mean = 0.0;
    for (double v : u) {
        ASSERT_GT(v, 0.0);
        ASSERT_LE(v, 1.0);
        mean += v;
    }
    mean /= static_cast<double>(u.size());
    EXPECT_NEAR(mean, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / u.size()));
}

TEST(ShardStream, ShardsAreDistinct)
{
    ShardStream a(1, 0), b(1, 1), c(2, 0);
    std::vector<std::uint64_t> va, vb, vc;
    for (int i = 0; i < 64; ++i) {
        va.push_back(a());
        vb.push_back(b());
        vc.push_back(c());
    }
    EXPECT_NE(va, vb);
    EXPECT_NE(va, vc);
    // Lag-0 correlation between shard streams.
    ShardStream x(7, 0), y(7, 1);
    const int n = 200000;
    double sxy = 0.0;
    for (int i = 0; i < n; ++i)
        sxy += (x.uniform() - 0.5) * (y.uniform() - 0.5);
    EXPECT_NEAR(sxy / n * 12.0, 0.0, 4.0 / std::sqrt(static_cast<double>(n)));
}
