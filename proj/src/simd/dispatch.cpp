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

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fasaris::simd {

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(FASARIS_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Isa isa)
{
    if (!isa_supported(isa))
        throw std::invalid_argument("SIMD variant not supported on this build/CPU: " + std::string(isa_name(isa)));
#if defined(FASARIS_HAVE_AVX2)
    if (isa == Isa::avx2)
        return avx2_kernels();
#endif
    return scalar_kernels();
}

namespace {

Isa select_isa()
{
    if (const char* env = std::getenv("FASARIS_SIMD")) {
        const std::string v(env);
        if (v == "scalar")
            return Isa::scalar;
        if (v == "avx2" && isa_supported(Isa::avx2))
            return Isa::avx2;
    }
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

} // namespace

Isa active_isa()
{
    static const Isa isa = select_isa();
    return isa;
}

const KernelTable& kernels()
{
    static const KernelTable& table = kernels_for(active_isa());
    return table;
}

} // namespace fasaris::simd
