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

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace fasaris {

// Port correlation as a function of the index lag between two ports.
using CorrelationKernel = double (*)(std::ptrdiff_t lag, double W, int N);

// sinc(2 pi lag W / (N - 1)) for the isotropic-scattering model; 1 when N == 1.
double clarke_kernel(std::ptrdiff_t lag, double W, int N);

// 1-based port indices.
double clarke_coefficient(int port_i, int port_j, double W, int N);

// N x N symmetric Toeplitz correlation matrix with unit diagonal.
// Eigenvalues are computed once at construction.
class CorrelationMatrix {
public:
    // Validates symmetry, Toeplitz structure, unit diagonal, range and PSD (min eig >= -1e-9 N).
    explicit CorrelationMatrix(Eigen::MatrixXd entries);

    int n() const noexcept { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const noexcept { return entries_; }
    double operator()(int i, int j) const { return entries_(i, j); }

    // Descending.
    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }

    // Factor F (N x r) with F F^T = entries up to clipped negative eigenvalues.
    // Columns belonging to eigenvalues <= drop_below are omitted.
    Eigen::MatrixXd root(double drop_below = 0.0) const;

private:
    Eigen::MatrixXd entries_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_; // columns ordered like eigenvalues_
};

CorrelationMatrix build_sigma(int N, double W, CorrelationKernel kernel = clarke_kernel);

inline constexpr double kDefaultMu = 0.97;
inline constexpr double kDefaultLambdaTh = 0.1;

struct BlockPartition {
    double mu = kDefaultMu;
    std::vector<int> block_sizes;
    double lambda_th = kDefaultLambdaTh;
    double fit_distance = 0.0;

    int block_count() const noexcept { return static_cast<int>(block_sizes.size()); }
    int port_count() const noexcept;
};

// Sum of squared differences between descending eigenvalues of the target and of the
// block model {1 + (L_b - 1) mu} U {1 - mu}^(N - B). `eigs_desc` must be sorted descending.
double block_model_distance(const Eigen::VectorXd& eigs_desc, const std::vector<int>& sizes, double mu);

// B = #{lambda_n >= lambda_th}; sizes start at round((lambda_b - (1 - mu)) / mu), clamped to >= 1,
// then are repaired to sum to N one unit at a time, always taking the cheapest step.
BlockPartition fit_block_partition(const CorrelationMatrix& sigma, double lambda_th = kDefaultLambdaTh,
                                   double mu = kDefaultMu);
BlockPartition fit_block_partition(const Eigen::VectorXd& eigs_desc, double lambda_th, double mu);

} // namespace fasaris
