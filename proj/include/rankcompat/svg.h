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

// Minimal standalone SVG charts. Each plotted series is one
// <g class="series" data-name="..."> element.

#ifndef RANKCOMPAT_SVG_H_
#define RANKCOMPAT_SVG_H_

#include <string>
#include <utility>
#include <vector>

namespace rankcompat {

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct PlotLabels {
  std::string title;
  std::string x;
  std::string y;
};

std::string ScatterSvg(const std::vector<PlotSeries>& series,
                       const PlotLabels& labels);

std::string LineSvg(const std::vector<PlotSeries>& series,
                    const PlotLabels& labels);

// values[row][col]; NaN cells are drawn hatched grey. Colour scale is [0,1].
std::string HeatmapSvg(const std::vector<double>& row_ticks,
                       const std::vector<double>& col_ticks,
                       const std::vector<std::vector<double>>& values,
                       const PlotLabels& labels);

std::string XmlEscape(const std::string& text);

}  // namespace rankcompat

#endif  // RANKCOMPAT_SVG_H_
