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

#include "fasaris/quadrature.hpp"

#include "fasaris/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace fasaris {

void QuadratureSpec::validate() const
{
    if (u < 4)
        throw ConfigError("u: quadrature node count must be >= 4", "u");
    if (!(h_gauss >= 4.0))
        throw ConfigError("h_gauss: Gaussian truncation must be >= 4 standard deviations", "h_gauss");
    if (!(h_chi >= 4.0))
        throw ConfigError("h_chi: envelope truncation must be >= 4 (units of sqrt(eps3))", "h_chi");
}

ChebyshevRule chebyshev_nodes(int u)
{
    if (u < 1)
        throw DomainError("chebyshev_nodes: u must be >= 1");
    ChebyshevRule rule;
    rule.nodes.resize(static_cast<std::size_t>(u));
    rule.weights.resize(static_cast<std::size_t>(u));
    const double step = std::numbers::pi / static_cast<double>(u);
    for (int t = 1; t <= u; ++t) {
        const double theta = (2.0 * t - 1.0) * std::numbers::pi / (2.0 * u);
        // sqrt(1 - cos^2) = sin on (0, pi); avoids cancellation near the ends.
        rule.nodes[static_cast<std::size_t>(t - 1)] = std::cos(theta);
        rule.weights[static_cast<std::size_t>(t - 1)] = step * std::sin(theta);
    }
    return rule;
}

const ChebyshevRule& chebyshev_rule(int u)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ChebyshevRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[u];
    if (!slot)
        slot = std::make_unique<ChebyshevRule>(chebyshev_nodes(u));
    return *slot;
}

} // namespace fasaris
