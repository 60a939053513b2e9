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

#include "fasaris/sweep.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace fasaris {

// Malformed sweep CSV; line() is 1-based (0 when the file itself is unusable).
class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Parses a sweep CSV written by write_csv. Requires the exact header and at least one row.
std::vector<SweepRow> read_csv(const std::filesystem::path& path);
std::vector<SweepRow> parse_csv(const std::string& text);

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// One series per (input file, method). The label is "<file stem>:<method>" for several files.
std::vector<PlotSeries> series_from_csv(const std::vector<std::filesystem::path>& csv_paths);

// SVG with a log10 y axis; OP values below `floor` are drawn at the floor.
std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label, double floor = 1e-6);

void emit_plot(const std::vector<std::filesystem::path>& csv_paths, const std::filesystem::path& out_path);

} // namespace fasaris
