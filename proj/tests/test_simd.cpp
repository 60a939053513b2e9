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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace fasaris;
using namespace fasaris::simd;

namespace {

class SimdEquivalence : public ::testing::Test {
protected:
    void SetUp() override
    {
        if (!isa_supported(Isa::avx2))
            GTEST_SKIP() << "AVX2 variant unavailable";
    }
    const KernelTable& ref = scalar_kernels();
    const KernelTable& vec() { return kernels_for(Isa::avx2); }

    static std::vector<double> random_vec(std::size_t n, double lo, double hi, unsigned seed)
    {
        std::mt19937_64 g(seed);
        std::uniform_real_distribution<double> d(lo, hi);
        std::vector<double> v(n);
        for (double& x : v)
            x = d(g);
        return v;
    }
};

} // namespace

TEST(SimdDispatch, ScalarAlwaysAvailable)
{
    EXPECT_TRUE(isa_supported(Isa::scalar));
    EXPECT_EQ(kernels_for(Isa::scalar).isa, Isa::scalar);
    EXPECT_EQ(isa_name(Isa::scalar), "scalar");
    EXPECT_EQ(kernels().isa, active_isa());
}

TEST_F(SimdEquivalence, Axpy)
{
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 129u}) {
        const auto x = random_vec(n, -2, 2, 1);
        auto y1 = random_vec(n, -2, 2, 2);
        auto y2 = y1;
        ref.axpy(0.37, x.data(), y1.data(), n);
        vec().axpy(0.37, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(y1[i], y2[i], 1e-15 * (1 + std::abs(y1[i])));
    }
}

TEST_F(SimdEquivalence, ModulusKernels)
{
    for (std::size_t n : {1u, 5u, 8u, 64u, 67u}) {
        const auto w = random_vec(n, 0, 3, 3);
        const auto re = random_vec(n, -3, 3, 4);
        const auto im = random_vec(n, -3, 3, 5);
        const double a = ref.weighted_modulus_sum(w.data(), re.data(), im.data(), n);
        const double b = vec().weighted_modulus_sum(w.data(), re.data(), im.data(), n);
        EXPECT_NEAR(a, b, 1e-13 * std::abs(a));
        std::vector<double> o1(n), o2(n);
        ref.modulus(re.data(), im.data(), 0.5, o1.data(), n);
        vec().modulus(re.data(), im.data(), 0.5, o2.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(o1[i], o2[i], 1e-15 * (1 + o1[i]));
    }
}

TEST_F(SimdEquivalence, BoxMuller)
{
    for (std::size_t pairs : {1u, 3u, 4u, 16u, 1001u}) {
        auto u = random_vec(2 * pairs, 0, 1, 6);
        u[0] = 1.0;
        u[pairs - 1] = 0x1.0p-53;
        std::vector<double> o1(2 * pairs), o2(2 * pairs);
        ref.box_muller(u.data(), o1.data(), pairs);
        vec().box_muller(u.data(), o2.data(), pairs);
        for (std::size_t i = 0; i < 2 * pairs; ++i)
            EXPECT_NEAR(o1[i], o2[i], 1e-13 * (1 + std::abs(o1[i])));
    }
}

TEST_F(SimdEquivalence, PhiPowerPanel)
{
    const std::vector<double> nodes = random_vec(61, -1, 1, 7);
    const std::vector<double> weights = random_vec(61, 0, 0.1, 8);
    PhiPanel p;
    p.nodes = nodes.data();
    p.weights = weights.data();
    p.n = nodes.size();
    p.mid = 0.3;
    p.half = 2.5;
    p.inv_two_var = 0.2;
    p.shift = 0.4;
    p.slope = 0.9;
    p.inv_scale = 1.3;
    const std::vector<int> powers{0, 1, 2, 5, 17};
    std::vector<double> o1(powers.size()), o2(powers.size());
    ref.phi_power_panel(p, powers.data(), o1.data(), powers.size());
    vec().phi_power_panel(p, powers.data(), o2.data(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
        EXPECT_NEAR(o1[j], o2[j], 1e-12 * std::abs(o1[j]) + 1e-300);
    p.inv_two_var = 0.0;
    ref.phi_power_panel(p, powers.data(), o1.data(), powers.size());
    vec().phi_power_panel(p, powers.data(), o2.data(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
        EXPECT_NEAR(o1[j], o2[j], 1e-12 * std::abs(o1[j]) + 1e-300);
}

TEST_F(SimdEquivalence, PhiloxUniformBitExact)
{
    for (std::uint64_t block0 : {0ULL, 5ULL, 0xFFFFFFFAULL, 0x1234567890ULL}) {
        const std::size_t blocks = 37;
        std::vector<double> o1(2 * blocks), o2(2 * blocks);
        ref.philox_uniform(0xdeadbeef, 0x01234567, 3, block0, o1.data(), blocks);
        vec().philox_uniform(0xdeadbeef, 0x01234567, 3, block0, o2.data(), blocks);
        EXPECT_EQ(o1, o2) << block0;
    }
}

TEST(SimdScalar, PhiloxUniformMatchesStream)
{
    std::vector<double> o(20);
    scalar_kernels().philox_uniform(42, 0, 1, 0, o.data(), 10);
    ShardStream s(42, 1);
    for (double v : o)
        EXPECT_EQ(v, s.uniform());
}
