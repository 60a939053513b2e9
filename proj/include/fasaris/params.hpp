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
#include <cstddef>

namespace fasaris {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point2&) const = default;
};

// Physical parameters of the link. Units are part of the field names where they matter.
struct SystemConfig {
    double P_dBm = 10.0;          // transmit power
    double omega_dB = 5.0;        // per-element ARIS amplification
    bool omega_dB_10log10 = false; // amplitude gain is 10^(dB/20); true reads dB as 10*log10(amplitude)
    int M = 64;                   // RIS elements
    int N = 20;                   // FAS ports
    double W = 5.0;               // FAS aperture, wavelengths
    double R = 10.0;              // target rate, bit/s/Hz
    double alpha = 3.9;           // path-loss exponent
    double eps1 = 1.0;            // E|h_m|^2
    double eps2 = 1.0;            // E|v_mk|^2
    double eps3 = 0.5;            // E|chi|^2
    double sigma_k2_dBm = -40.0;  // port noise
    double sigma_r2_dBm = -40.0;  // receiver noise
    double d0 = 10.0;             // reference distance, m
    Point2 bs_pos{0.0, 0.0};
    Point2 ris_pos{40.0, 40.0};
    Point2 rx_pos{100.0, 0.0};

    // Throws ConfigError naming the first invalid field.
    void validate() const;
};

struct Distances {
    double d_sr = 0.0;
    double d_rd = 0.0;
    double d_sd = 0.0;
};

struct LinkBudget {
    double omega1 = 0.0;   // amplitude scale of the reflected path
    double omega2 = 0.0;   // amplitude scale of the direct path
    double sigma2_W = 0.0; // effective noise power
    double beta = 0.0;     // SNR outage threshold, 2^R - 1
    Distances dist;
};

double dbm_to_watt(double dBm);

// Linear amplitude gain of the surface, honouring `omega_dB_10log10`.
double amplitude_gain(const SystemConfig& cfg);

// SNR threshold 2^R - 1.
double outage_threshold(double rate);

Distances derive_distances(const SystemConfig& cfg);

// sigma^2 = w^2 sigma_k^2 + sigma_r^2 with w the amplitude gain; Omega_1 carries w.
LinkBudget link_budget(const SystemConfig& cfg);

} // namespace fasaris
