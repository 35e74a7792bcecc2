// SPDX-License-Identifier: Apache-2.0
//
// elaa-isac-sim  Near-field ELAA / ISAC simulation library
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

#include "elaa/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace elaa
{

std::string format_number(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void Table::add_row(const std::vector<std::string> &cells)
{
    if (cells.size() != columns.size())
        throw std::invalid_argument("Table::add_row: cell count does not match header");
    rows.push_back(cells);
}

void write_csv(const Table &table, const std::string &path)
{
    std::ofstream out(path, std::ios::binary); // binary: byte-identical output
    if (!out)
        throw std::runtime_error("cannot write CSV file: " + path);
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto &row : table.rows)
    {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << row[c];
        out << "\n";
    }
}

void write_svg_lineplot(const Table &table, const std::string &path, const std::string &title,
                        bool log_x)
{
    if (table.columns.size() < 2 || table.rows.empty())
        throw std::invalid_argument("write_svg_lineplot: need at least two columns and one row");

    const int width = 880, height = 560;
    const int ml = 80, mr = 170, mt = 50, mb = 60;
    const double pw = width - ml - mr, ph = height - mt - mb;

    auto cell = [&](std::size_t r, std::size_t c) {
        return std::strtod(table.rows[r][c].c_str(), nullptr);
    };
    auto xval = [&](std::size_t r) {
        double x = cell(r, 0);
        return log_x ? std::log10(x > 0.0 ? x : 1e-300) : x;
    };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (std::size_t r = 0; r < table.rows.size(); ++r)
    {
        double x = xval(r);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        for (std::size_t c = 1; c < table.columns.size(); ++c)
        {
            double y = cell(r, c);
            if (std::isfinite(y))
            {
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax <= xmin)
        xmax = xmin + 1.0;
    if (ymax <= ymin)
        ymax = ymin + 1.0;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write SVG file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";

    // frame and ticks
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t)
    {
        double fx = xmin + (xmax - xmin) * t / 5.0;
        double fy = ymin + (ymax - ymin) * t / 5.0;
        double tx = px(fx), ty = py(fy);
        out << "<line x1=\"" << tx << "\" y1=\"" << mt + ph << "\" x2=\"" << tx << "\" y2=\""
            << mt + ph + 6 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << tx << "\" y=\"" << mt + ph + 22
            << "\" text-anchor=\"middle\" font-size=\"11\">"
            << format_number(log_x ? std::pow(10.0, fx) : fx) << "</text>\n";
        out << "<line x1=\"" << ml - 6 << "\" y1=\"" << ty << "\" x2=\"" << ml << "\" y2=\"" << ty
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 10 << "\" y=\"" << ty + 4
            << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(fy) << "</text>\n";
    }
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
        << "\" text-anchor=\"middle\" font-size=\"13\">" << table.columns[0] << "</text>\n";

    for (std::size_t c = 1; c < table.columns.size(); ++c)
    {
        const char *color = palette[(c - 1) % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t r = 0; r < table.rows.size(); ++r)
        {
            double y = cell(r, c);
            if (!std::isfinite(y))
                continue;
            out << px(xval(r)) << "," << py(y) << " ";
        }
        out << "\"/>\n";
        double ly = mt + 18.0 * static_cast<double>(c);
        out << "<line x1=\"" << ml + pw + 10 << "\" y1=\"" << ly << "\" x2=\"" << ml + pw + 34
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw + 40 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">"
            << table.columns[c] << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace elaa
