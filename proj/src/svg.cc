/*
 * Copyright 2026 The rankcompat Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rankcompat/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace rankcompat {
namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void Add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void Finish() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
    const double pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;
  }
};

struct Frame {
  Extent x, y;
  double PlotX(double v) const {
    return kLeft + (v - x.lo) / (x.hi - x.lo) * (kWidth - kLeft - kRight);
  }
  double PlotY(double v) const {
    return kHeight - kBottom -
           (v - y.lo) / (y.hi - y.lo) * (kHeight - kTop - kBottom);
  }
};

std::string Header(const PlotLabels& labels) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(kWidth) +
      "\" height=\"" + Num(kHeight) + "\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + Num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
         "font-size=\"15\">" + XmlEscape(labels.title) + "</text>\n";
  out += "<text x=\"" + Num(kWidth / 2) + "\" y=\"" + Num(kHeight - 15) +
         "\" text-anchor=\"middle\">" + XmlEscape(labels.x) + "</text>\n";
  out += "<text x=\"18\" y=\"" + Num(kHeight / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         Num(kHeight / 2) + ")\">" + XmlEscape(labels.y) + "</text>\n";
  return out;
}

std::string Axes(const Frame& f) {
  std::string out = "<g class=\"axes\" stroke=\"black\">\n";
  out += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kHeight - kBottom) +
         "\" x2=\"" + Num(kWidth - kRight) + "\" y2=\"" +
         Num(kHeight - kBottom) + "\"/>\n";
  out += "<line x1=\"" + Num(kLeft) + "\" y1=\"" + Num(kTop) + "\" x2=\"" +
         Num(kLeft) + "\" y2=\"" + Num(kHeight - kBottom) + "\"/>\n";
  out += "</g>\n<g class=\"ticks\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = f.x.lo + (f.x.hi - f.x.lo) * i / 4.0;
    const double yv = f.y.lo + (f.y.hi - f.y.lo) * i / 4.0;
    out += "<text x=\"" + Num(f.PlotX(xv)) + "\" y=\"" +
           Num(kHeight - kBottom + 16) + "\" text-anchor=\"middle\">" +
           Tick(xv) + "</text>\n";
    out += "<text x=\"" + Num(kLeft - 6) + "\" y=\"" + Num(f.PlotY(yv) + 4) +
           "\" text-anchor=\"end\">" + Tick(yv) + "</text>\n";
  }
  return out + "</g>\n";
}

Frame FrameFor(const std::vector<PlotSeries>& series) {
  Frame f;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      f.x.Add(x);
      f.y.Add(y);
    }
  }
  f.x.Finish();
  f.y.Finish();
  return f;
}

std::string Legend(const std::vector<PlotSeries>& series) {
  std::string out = "<g class=\"legend\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 14.0 * static_cast<double>(i);
    out += "<rect x=\"" + Num(kWidth - kRight - 130) + "\" y=\"" + Num(y) +
           "\" width=\"10\" height=\"10\" fill=\"" +
           kPalette[i % kPalette.size()] + "\"/>\n";
    out += "<text x=\"" + Num(kWidth - kRight - 115) + "\" y=\"" +
           Num(y + 9) + "\">" + XmlEscape(series[i].name) + "</text>\n";
  }
  return out + "</g>\n";
}

std::string SeriesOpen(const PlotSeries& s) {
  return "<g class=\"series\" data-name=\"" + XmlEscape(s.name) + "\">\n";
}

}  // namespace

std::string XmlEscape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string ScatterSvg(const std::vector<PlotSeries>& series,
                       const PlotLabels& labels) {
  const Frame f = FrameFor(series);
  std::string out = Header(labels) + Axes(f);
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += SeriesOpen(series[i]);
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      out += "<circle cx=\"" + Num(f.PlotX(x)) + "\" cy=\"" + Num(f.PlotY(y)) +
             "\" r=\"2.5\" fill=\"" + kPalette[i % kPalette.size()] +
             "\" fill-opacity=\"0.6\"/>\n";
    }
    out += "</g>\n";
  }
  return out + Legend(series) + "</svg>\n";
}

std::string LineSvg(const std::vector<PlotSeries>& series,
                    const PlotLabels& labels) {
  const Frame f = FrameFor(series);
  std::string out = Header(labels) + Axes(f);
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += SeriesOpen(series[i]);
    std::string path;
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      path += (path.empty() ? "M" : " L") + Num(f.PlotX(x)) + " " +
              Num(f.PlotY(y));
    }
    out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" +
           kPalette[i % kPalette.size()] + "\" stroke-width=\"1.5\"/>\n";
    out += "</g>\n";
  }
  return out + Legend(series) + "</svg>\n";
}

std::string HeatmapSvg(const std::vector<double>& row_ticks,
                       const std::vector<double>& col_ticks,
                       const std::vector<std::vector<double>>& values,
                       const PlotLabels& labels) {
  std::string out = Header(labels);
  const double w = (kWidth - kLeft - kRight) /
                   static_cast<double>(std::max<std::size_t>(col_ticks.size(), 1));
  const double h = (kHeight - kTop - kBottom) /
                   static_cast<double>(std::max<std::size_t>(row_ticks.size(), 1));
  out += "<g class=\"series\" data-name=\"heatmap\">\n";
  for (std::size_t r = 0; r < values.size(); ++r) {
    for (std::size_t c = 0; c < values[r].size(); ++c) {
      const double v = values[r][c];
      std::string fill = "#bbbbbb";
      if (std::isfinite(v)) {
        // White (0) to dark blue (1).
        const double t = std::clamp(v, 0.0, 1.0);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                      static_cast<int>(255 * (1 - t)),
                      static_cast<int>(255 * (1 - 0.7 * t)),
                      static_cast<int>(255 - 100 * t));
        fill = buf;
      }
      // Row 0 at the bottom.
      const double y = kHeight - kBottom - h * static_cast<double>(r + 1);
      out += "<rect x=\"" + Num(kLeft + w * static_cast<double>(c)) +
             "\" y=\"" + Num(y) + "\" width=\"" + Num(w) + "\" height=\"" +
             Num(h) + "\" fill=\"" + fill + "\"><title>" +
             (std::isfinite(v) ? Tick(v) : std::string("degenerate")) +
             "</title></rect>\n";
    }
  }
  out += "</g>\n<g class=\"ticks\">\n";
  for (std::size_t c = 0; c < col_ticks.size(); c += std::max<std::size_t>(1, col_ticks.size() / 6)) {
    out += "<text x=\"" + Num(kLeft + w * (static_cast<double>(c) + 0.5)) +
           "\" y=\"" + Num(kHeight - kBottom + 16) +
           "\" text-anchor=\"middle\">" + Tick(col_ticks[c]) + "</text>\n";
  }
  for (std::size_t r = 0; r < row_ticks.size(); r += std::max<std::size_t>(1, row_ticks.size() / 6)) {
    out += "<text x=\"" + Num(kLeft - 6) + "\" y=\"" +
           Num(kHeight - kBottom - h * (static_cast<double>(r) + 0.5) + 4) +
           "\" text-anchor=\"end\">" + Tick(row_ticks[r]) + "</text>\n";
  }
  return out + "</g>\n</svg>\n";
}

}  // namespace rankcompat
