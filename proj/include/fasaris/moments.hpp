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

#include "fasaris/correlation.hpp"
#include "fasaris/params.hpp"

namespace fasaris {

// Gaussian (CLT) surrogate of one port's cascade gain and of the port-to-port correlation.
struct GaussianSurrogate {
    double e_gamma = 0.0; // mean of gamma_k
    double v_gamma = 0.0; // variance of gamma_k
    double rho1 = 0.0;    // intra-block correlation
    double rho0 = 0.0;    // inter-block correlation
};

struct CascadeMoments {
    double e_gamma = 0.0;
    double v_gamma = 0.0;
};

// Mean and variance of sum_m |h_m||v_mk| with Rayleigh envelopes of power eps1, eps2.
CascadeMoments cascade_moments(int M, double eps1, double eps2);

// exp(-z) I_0(z) for z >= 0.
double bessel_i0_scaled(double z);

// Joint density of two Rayleigh envelopes with common power eps and power correlation mu in [0, 1).
double bivariate_rayleigh_pdf(double x, double y, double mu, double eps);

// E[|v_k||v_l|] for envelopes with power eps and power correlation mu. Closed form at mu = 0 and
// mu = 1, otherwise adaptive 2-D Gauss-Kronrod integration of the joint density on [0, 6 sqrt(eps)]^2.
double envelope_cross_moment(double mu, double eps);

// Pearson correlation of two ports' cascade gains when the RIS->port coefficients have power
// correlation mu. Independent of M. Values are memoized per (mu, eps1, eps2).
double eta(double mu, double eps1, double eps2);

// The same quantity assembled with explicit M factors:
//   (M eps1 E[|v_k||v_l|] - E_gamma^2 / M) / V_gamma.
double eta_with_elements(double mu, int M, double eps1, double eps2);

// rho1 = eta(mu^2): the block constant mu is a coefficient correlation, eta takes a power
// correlation. rho0 = eta(0).
GaussianSurrogate build_surrogate(const SystemConfig& cfg, const BlockPartition& partition);

} // namespace fasaris
