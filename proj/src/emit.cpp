/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The eesched Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "eesched/experiments.hpp"
#include "eesched/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace eesched {

namespace {

void require_rows(const std::vector<SweepRow>& rows)
{
    if (rows.empty())
        throw std::invalid_argument("no sweep rows to emit");
}

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    if (!out)
        throw std::ios_base::failure("error writing " + path.string());
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string compact(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

} // namespace

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
    require_rows(rows);
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.axis) << ',' << format_double(r.value) << ',' << to_string(r.scheme) << ','
            << format_double(r.mean_ee) << ',' << format_double(r.mean_rate) << ','
            << format_double(r.mean_users) << ',' << r.trials << '\n';
    }
}

void write_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path)
{
    require_rows(rows);
    write_file(path, [&](std::ostream& out) { write_csv(rows, out); });
}

void write_svg_chart(const std::vector<SweepRow>& rows, ChartMetric metric, std::ostream& out)
{
    require_rows(rows);

    std::vector<double> xs;
    std::vector<Scheme> schemes;
    for (const auto& r : rows) {
        if (std::find(xs.begin(), xs.end(), r.value) == xs.end())
            xs.push_back(r.value);
        if (std::find(schemes.begin(), schemes.end(), r.scheme) == schemes.end())
            schemes.push_back(r.scheme);
    }
    auto metric_of = [&](const SweepRow& r) { return metric == ChartMetric::mean_ee ? r.mean_ee : r.mean_users; };
    double y_max = 0.0;
    for (const auto& r : rows)
        y_max = std::max(y_max, metric_of(r));
    y_max = y_max > 0.0 ? y_max * 1.05 : 1.0;

    const double width = 760, height = 480;
    const double left = 90, right = 190, top = 40, bottom = 60;
    const double plot_w = width - left - right, plot_h = height - top - bottom;
    // Axis points are spaced evenly by index so logarithmic grids stay readable.
    auto px = [&](double x) {
        const auto idx = static_cast<double>(std::find(xs.begin(), xs.end(), x) - xs.begin());
        return left + (xs.size() > 1 ? plot_w * idx / static_cast<double>(xs.size() - 1) : plot_w / 2);
    };
    auto py = [&](double y) { return top + plot_h * (1.0 - y / y_max); };

    const std::string y_label = metric == ChartMetric::mean_ee ? "mean EE (bit/J)" : "mean scheduled users";
    const std::string x_label = rows.front().axis == SweepAxis::p_max_dbm ? "p_max (dBm)" : "P_sta,0 (mW)";

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << left + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << y_label
        << " vs " << x_label << "</text>\n"
        << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double y = y_max * i / 5.0;
        out << "<line x1=\"" << left << "\" x2=\"" << left + plot_w << "\" y1=\"" << fixed(py(y), 2) << "\" y2=\""
            << fixed(py(y), 2) << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << left - 6 << "\" y=\"" << fixed(py(y) + 4, 2) << "\" text-anchor=\"end\">" << compact(y)
            << "</text>\n";
    }
    for (double x : xs) {
        out << "<text x=\"" << fixed(px(x), 2) << "\" y=\"" << top + plot_h + 18
            << "\" text-anchor=\"middle\">" << compact(x) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 14 << "\" text-anchor=\"middle\">" << x_label
        << "</text>\n"
        << "<text transform=\"translate(22," << top + plot_h / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
        << y_label << "</text>\n";

    for (std::size_t s = 0; s < schemes.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (const auto& r : rows) {
            if (r.scheme != schemes[s])
                continue;
            out << (first ? "" : " ") << fixed(px(r.value), 2) << ',' << fixed(py(metric_of(r)), 2);
            first = false;
        }
        out << "\"/>\n";
        for (const auto& r : rows) {
            if (r.scheme == schemes[s])
                out << "<circle cx=\"" << fixed(px(r.value), 2) << "\" cy=\"" << fixed(py(metric_of(r)), 2)
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
        const double ly = top + 16 + 20.0 * static_cast<double>(s);
        out << "<line x1=\"" << left + plot_w + 14 << "\" x2=\"" << left + plot_w + 38 << "\" y1=\"" << ly
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << left + plot_w + 44 << "\" y=\"" << ly + 4 << "\">" << to_string(schemes[s])
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_svg_chart(const std::vector<SweepRow>& rows, ChartMetric metric, const std::filesystem::path& path)
{
    require_rows(rows);
    write_file(path, [&](std::ostream& out) { write_svg_chart(rows, metric, out); });
}

} // namespace eesched
