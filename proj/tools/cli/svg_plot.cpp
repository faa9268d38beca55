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

#include "svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace qwalk::cli {

namespace {

constexpr double kWidth = 800, kHeight = 450;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

constexpr std::array<const char*, 6> kPalette{"#1f4e9c", "#2e8b57", "#c0392b",
                                              "#8e44ad", "#d35400", "#555555"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!(lo <= hi)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  double map(double v, double out_lo, double out_hi) const {
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::ofstream open_svg(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out;
}

void axes(std::ofstream& out, const Range& xr, const Range& yr, const std::string& title,
          const std::string& x_label, const std::string& y_label) {
  const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"black\" points=\"" << num(x0) << ',' << num(y1) << ' '
      << num(x0) << ',' << num(y0) << ' ' << num(x1) << ',' << num(y0) << "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double px = xr.map(fx, x0, x1);
    const double py = yr.map(fy, y0, y1);
    out << "<text x=\"" << num(px) << "\" y=\"" << num(y0 + 18)
        << "\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    out << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(py + 4)
        << "\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
  }
  out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text transform=\"translate(16," << (y0 + y1) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << y_label << "</text>\n";
}

}  // namespace

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     const std::vector<LineSeries>& series) {
  Range xr, yr;
  for (const auto& s : series) {
    if (!s.y.empty()) {
      xr.add(0);
      xr.add(static_cast<double>(s.y.size() - 1));
    }
    for (double v : s.y) yr.add(v);
  }
  xr.finish();
  yr.finish();

  auto out = open_svg(path);
  axes(out, xr, yr, title, x_label, y_label);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    out << "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"" << color << "\" points=\"";
    for (std::size_t t = 0; t < series[i].y.size(); ++t) {
      out << num(xr.map(static_cast<double>(t), kLeft, kWidth - kRight)) << ','
          << num(yr.map(series[i].y[t], kHeight - kBottom, kTop)) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kRight - 4 << "\" y=\"" << kTop + 14 * (i + 1)
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << series[i].label << "</text>\n";
  }
  out << "</svg>\n";
}

void write_scatter_plot(const std::filesystem::path& path, const std::string& title,
                        const std::string& x_label, const std::string& y_label,
                        const std::vector<ScatterPoint>& points) {
  Range xr, yr;
  for (const auto& p : points) {
    xr.add(p.x);
    yr.add(p.y);
  }
  xr.finish();
  yr.finish();

  auto out = open_svg(path);
  axes(out, xr, yr, title, x_label, y_label);
  // Grey first so the dark tier is drawn on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& p : points) {
      const bool dark = p.group == 1;
      if (dark != (pass == 1)) continue;
      out << "<circle r=\"1.6\" cx=\"" << num(xr.map(p.x, kLeft, kWidth - kRight)) << "\" cy=\""
          << num(yr.map(p.y, kHeight - kBottom, kTop)) << "\" fill=\""
          << (dark ? "black" : "#9a9a9a") << "\"/>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace qwalk::cli
