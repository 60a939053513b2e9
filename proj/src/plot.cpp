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

#include "fasaris/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fasaris {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

double field_double(std::string_view s, std::size_t line, const char* what)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw CsvError(std::string("malformed ") + what + " field '" + std::string(s) + "'", line);
    return v;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::vector<SweepRow> parse_csv(const std::string& text)
{
    std::vector<SweepRow> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!header_seen) {
            if (line != kCsvHeader)
                throw CsvError("unexpected header (expected '" + std::string(kCsvHeader) + "')", line_no);
            header_seen = true;
            continue;
        }
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != 8)
            throw CsvError("expected 8 fields, found " + std::to_string(f.size()), line_no);
        SweepRow r;
        try {
            r.variable = parse_variable(f[0]);
            r.method = parse_method(f[2]);
        } catch (const std::exception& e) {
            throw CsvError(e.what(), line_no);
        }
        r.value = field_double(f[1], line_no, "value");
        r.op = field_double(f[3], line_no, "op");
        r.ci_half_width = field_double(f[4], line_no, "ci_half_width");
        r.diag_residual = field_double(f[5], line_no, "diag_residual");
        const double trials = field_double(f[6], line_no, "trials");
        if (trials < 0.0 || trials != std::floor(trials))
            throw CsvError("malformed trials field", line_no);
        r.trials = static_cast<std::uint64_t>(trials);
        r.runtime_ms = field_double(f[7], line_no, "runtime_ms");
        if (!(r.op >= 0.0 && r.op <= 1.0))
            throw CsvError("op outside [0, 1]", line_no);
        rows.push_back(r);
    }
    if (!header_seen)
        throw CsvError("empty file", line_no + 1);
    if (rows.empty())
        throw CsvError("no data rows", line_no + 1);
    return rows;
}

std::vector<SweepRow> read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CsvError("cannot read '" + path.string() + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv(ss.str());
}

std::vector<PlotSeries> series_from_csv(const std::vector<std::filesystem::path>& csv_paths)
{
    std::vector<PlotSeries> out;
    for (const auto& path : csv_paths) {
        const auto rows = read_csv(path);
        std::map<Method, PlotSeries> by_method;
        for (const auto& r : rows) {
            auto& s = by_method[r.method];
            s.label = csv_paths.size() > 1 ? path.stem().string() + ":" + std::string(method_name(r.method))
                                           : std::string(method_name(r.method));
            s.x.push_back(r.value);
            s.y.push_back(r.op);
        }
        for (auto& [m, s] : by_method)
            out.push_back(std::move(s));
    }
    return out;
}

std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label, double floor)
{
    constexpr double width = 720.0, height = 480.0;
    constexpr double left = 70.0, right = 190.0, top = 20.0, bottom = 50.0;
    const double pw = width - left - right;
    const double ph = height - top - bottom;

    double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = 0.0;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, std::floor(std::log10(std::max(s.y[i], floor))));
        }
    if (!(xmax > xmin)) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    ymin = std::min(ymin, -1.0);
    const double ymax = 0.0;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double op) { return top + (ymax - std::log10(std::max(op, floor))) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int e = static_cast<int>(ymin); e <= 0; ++e) {
        const double y = sy(std::pow(10.0, e));
        os << "<line x1=\"" << left << "\" x2=\"" << left + pw << "\" y1=\"" << fmt(y) << "\" y2=\"" << fmt(y)
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << left - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">1e" << e << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5.0;
        os << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << fmt(xv)
           << "</text>\n";
    }
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
       << ")\" text-anchor=\"middle\">outage probability</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            os << fmt(sx(s.x[i])) << "," << fmt(sy(s.y[i])) << " ";
        os << "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            os << "<circle cx=\"" << fmt(sx(s.x[i])) << "\" cy=\"" << fmt(sy(s.y[i])) << "\" r=\"2.5\" fill=\""
               << colour << "\"/>\n";
        const double ly = top + 14.0 + 18.0 * static_cast<double>(k);
        os << "<line x1=\"" << left + pw + 10 << "\" x2=\"" << left + pw + 30 << "\" y1=\"" << ly << "\" y2=\"" << ly
           << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << left + pw + 35 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_plot(const std::vector<std::filesystem::path>& csv_paths, const std::filesystem::path& out_path)
{
    if (csv_paths.empty())
        throw CsvError("no input CSV given", 0);
    const auto series = series_from_csv(csv_paths);
    const auto first = read_csv(csv_paths.front());
    const std::string svg = render_svg(series, std::string(variable_name(first.front().variable)));
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw OutputError("cannot open '" + out_path.string() + "' for writing");
    out << svg;
    if (!out)
        throw OutputError("failed writing '" + out_path.string() + "'");
}

} // namespace fasaris
