// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal static SVG charts for eyeballing CLI output. The CSV files are the
// data of record; these are only a view.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qwalk::cli {

struct LineSeries {
  std::string label;
  std::vector<double> y;  // x is the sample index
};

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<LineSeries>& series);

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  int group = 0;  // 1 = dark, otherwise grey
};

void write_scatter_plot(const std::filesystem::path& path, const std::string& title,
                        const std::string& x_label, const std::string& y_label,
                        const std::vector<ScatterPoint>& points);

}  // namespace qwalk::cli
