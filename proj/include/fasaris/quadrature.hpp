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

#include <cstddef>
#include <vector>

namespace fasaris {

// Controls every numerical integral of the analytic pipeline.
struct QuadratureSpec {
    int u = 64;           // nodes per panel
    double h_gauss = 6.0; // Gaussian truncation, in standard deviations
    double h_chi = 6.0;   // direct-link envelope truncation, in units of sqrt(eps3)

    void validate() const; // throws ConfigError
    QuadratureSpec doubled() const
    {
        QuadratureSpec q = *this;
        q.u *= 2;
        return q;
    }
};

// u-point Chebyshev rule: p_t = cos((2t - 1) pi / (2u)), w_t = (pi / u) sqrt(1 - p_t^2), so that
//   int_a^b f(x) dx ~ (b - a) / 2 * sum_t w_t f((b - a) / 2 * p_t + (a + b) / 2).
struct ChebyshevRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }

    template <class F>
    double integrate(F&& f, double a, double b) const
    {
        if (!(b > a))
            return 0.0;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double acc = 0.0;
        for (std::size_t t = 0; t < nodes.size(); ++t)
            acc += weights[t] * f(mid + half * nodes[t]);
        return half * acc;
    }

    // integrate() applied to f minus its linear interpolant through (a, f(a)), (b, f(b));
    // the interpolant is integrated exactly.
    template <class F>
    double integrate_endpoint_corrected(F&& f, double a, double b) const
    {
        if (!(b > a))
            return 0.0;
        const double fa = f(a);
        const double fb = f(b);
        const double inv = 1.0 / (b - a);
        const double body = integrate([&](double x) { return f(x) - fa - (fb - fa) * (x - a) * inv; }, a, b);
        return body + 0.5 * (fa + fb) * (b - a);
    }
};

ChebyshevRule chebyshev_nodes(int u);

// Cached rule for repeated use; thread-safe.
const ChebyshevRule& chebyshev_rule(int u);

} // namespace fasaris
