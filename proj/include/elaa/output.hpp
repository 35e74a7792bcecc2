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

#ifndef elaa_output_H
#define elaa_output_H

#include <string>
#include <vector>

namespace elaa
{

// Fixed %.12g rendering so CSV output is byte-identical across reruns.
std::string format_number(double value);

struct Table
{
    std::vector<std::string> columns; // header row, names carry units
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<std::string> &cells);
};

void write_csv(const Table &table, const std::string &path);

// Minimal self-contained line plot: one polyline per y-column against the
// first column, linear or log10 x axis, with axis labels and a legend.
void write_svg_lineplot(const Table &table, const std::string &path, const std::string &title,
                        bool log_x = false);

} // namespace elaa

#endif
