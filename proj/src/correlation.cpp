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

#include "fasaris/correlation.hpp"

#include "fasaris/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace fasaris {

double clarke_kernel(std::ptrdiff_t lag, double W, int N)
{
    if (N <= 1 || lag == 0)
        return 1.0;
    const double x = 2.0 * std::numbers::pi * static_cast<double>(lag) * W / static_cast<double>(N - 1);
    return std::sin(x) / x;
}

double clarke_coefficient(int port_i, int port_j, double W, int N)
{
    if (port_i < 1 || port_j < 1 || port_i > N || port_j > N)
        throw DomainError("clarke_coefficient: port index outside [1, N]");
    return clarke_kernel(port_i - port_j, W, N);
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries))
{
    const Eigen::Index n = entries_.rows();
    if (n < 1 || entries_.cols() != n)
        throw DomainError("correlation matrix must be square and non-empty");

    constexpr double tol = 1e-12;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(entries_(i, i) - 1.0) > tol)
            throw DomainError("correlation matrix must have a unit diagonal");
        for (Eigen::Index j = 0; j < n; ++j) {
            const double v = entries_(i, j);
            if (!std::isfinite(v) || v < -1.0 - tol || v > 1.0 + tol)
                throw DomainError("correlation entries must lie in [-1, 1]");
            if (std::abs(v - entries_(j, i)) > tol)
                throw DomainError("correlation matrix must be symmetric");
            if (i + 1 < n && j + 1 < n && std::abs(v - entries_(i + 1, j + 1)) > tol)
                throw DomainError("correlation matrix must be Toeplitz");
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigen-decomposition of the correlation matrix failed");
    // Eigen returns ascending order.
    eigenvalues_ = solver.eigenvalues().reverse();
    eigenvectors_ = solver.eigenvectors().rowwise().reverse();

    const double min_eig = eigenvalues_(n - 1);
    if (min_eig < -1e-9 * static_cast<double>(n)) {
        std::ostringstream os;
        os << "correlation matrix is not positive semidefinite (min eigenvalue " << min_eig << ")";
        throw NumericalError(os.str());
    }
}

Eigen::MatrixXd CorrelationMatrix::root(double drop_below) const
{
    Eigen::Index keep = 0;
    while (keep < eigenvalues_.size() && eigenvalues_(keep) > drop_below)
        ++keep;
    keep = std::max<Eigen::Index>(keep, 1);
    Eigen::MatrixXd f = eigenvectors_.leftCols(keep);
    for (Eigen::Index c = 0; c < keep; ++c)
        f.col(c) *= std::sqrt(std::max(eigenvalues_(c), 0.0));
    return f;
}

CorrelationMatrix build_sigma(int N, double W, CorrelationKernel kernel)
{
    if (N < 1)
        throw ConfigError("N: number of FAS ports must be a positive integer", "N");
    if (!(W > 0.0))
        throw ConfigError("W: aperture must be > 0 (wavelengths)", "W");

    std::vector<double> first_row(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j)
        first_row[static_cast<std::size_t>(j)] = kernel(j, W, N);

    Eigen::MatrixXd m(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            m(i, j) = first_row[static_cast<std::size_t>(std::abs(i - j))];
    return CorrelationMatrix(std::move(m));
}

int BlockPartition::port_count() const noexcept
{
    return std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
}

double block_model_distance(const Eigen::VectorXd& eigs_desc, const std::vector<int>& sizes, double mu)
{
    const auto n = static_cast<std::size_t>(eigs_desc.size());
    std::vector<double> model;
    model.reserve(n);
    for (int l : sizes)
        model.push_back(1.0 + (l - 1) * mu);
    std::sort(model.begin(), model.end(), std::greater<>());
    while (model.size() < n)
        model.push_back(1.0 - mu);

    double dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = eigs_desc(static_cast<Eigen::Index>(i)) - model[i];
        dist += d * d;
    }
    return dist;
}

BlockPartition fit_block_partition(const Eigen::VectorXd& eigs_desc, double lambda_th, double mu)
{
    if (!(mu > 0.0 && mu <= 1.0))
        throw DomainError("fit_block_partition: mu must lie in (0, 1]");
    if (!(lambda_th > 0.0))
        throw DomainError("fit_block_partition: lambda_th must be > 0");

    const int n = static_cast<int>(eigs_desc.size());
    int b_count = 0;
    for (int i = 0; i < n; ++i)
        if (eigs_desc(i) >= lambda_th)
            ++b_count;
    if (b_count == 0) {
        std::ostringstream os;
        os << "fit_block_partition: no eigenvalue reaches lambda_th = " << lambda_th
           << " (largest is " << (n > 0 ? eigs_desc(0) : 0.0) << "); use a smaller lambda_th";
        throw ModelError(os.str());
    }

    std::vector<int> sizes(static_cast<std::size_t>(b_count));
    for (int b = 0; b < b_count; ++b) {
        const double ideal = (eigs_desc(b) - (1.0 - mu)) / mu;
        sizes[static_cast<std::size_t>(b)] = std::max(1, static_cast<int>(std::lround(ideal)));
    }

    // Each block's term (lambda_b - 1 + mu - mu L_b)^2 is convex in L_b, so repairing the sum one
    // cheapest unit at a time from the per-block optimum reaches the constrained optimum.
    auto cost = [&](int b, int l) {
        const double d = eigs_desc(b) - (1.0 + (l - 1) * mu);
        return d * d;
    };
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    while (total != n) {
        const int step = total < n ? 1 : -1;
        int best = -1;
        double best_delta = std::numeric_limits<double>::infinity();
        for (int b = 0; b < b_count; ++b) {
            const int l = sizes[static_cast<std::size_t>(b)];
            if (l + step < 1)
                continue;
            const double delta = cost(b, l + step) - cost(b, l);
            if (delta < best_delta) {
                best_delta = delta;
                best = b;
            }
        }
        if (best < 0)
            throw NumericalError("fit_block_partition: cannot repair block sizes");
        sizes[static_cast<std::size_t>(best)] += step;
        total += step;
    }

    BlockPartition part;
    part.mu = mu;
    part.lambda_th = lambda_th;
    part.block_sizes = std::move(sizes);
    part.fit_distance = block_model_distance(eigs_desc, part.block_sizes, mu);
    return part;
}

BlockPartition fit_block_partition(const CorrelationMatrix& sigma, double lambda_th, double mu)
{
    return fit_block_partition(sigma.eigenvalues(), lambda_th, mu);
}

} // namespace fasaris
