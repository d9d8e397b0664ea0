// Copyright 2026 The merging-paths Authors
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

#pragma once

#include <cstddef>
#include <sstream>
#include <string>

#include "merging/arrival.hpp"

namespace merging::svg {

struct Style {
  int cell = 40;
  int margin = 20;
};

/// Lattice path drawing: x counts left-lane cars, y counts right-lane cars,
/// origin at the bottom left. Bounce steps carry class "step bounce".
inline std::string render_path(const ArrivalSequence& b, const Style& style = {}) {
  const MergingPath path = merging_path(b);
  const Endpoint end = path.endpoint();
  const std::size_t cols = end.n;
  const std::size_t rows = end.m;
  const int width = static_cast<int>(cols) * style.cell + 2 * style.margin;
  const int height = static_cast<int>(rows) * style.cell + 2 * style.margin;
  auto px = [&](std::size_t x) { return style.margin + static_cast<int>(x) * style.cell; };
  auto py = [&](std::size_t y) { return height - style.margin - static_cast<int>(y) * style.cell; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<title>" << b.str() << "</title>\n";
  out << "<style>.grid{stroke:#cccccc;stroke-width:1}.diagonal{stroke:#888888;stroke-width:1;"
         "stroke-dasharray:4 4}.step{stroke:#000000;stroke-width:3;stroke-linecap:round}"
         ".bounce{stroke:#1f5fd6;stroke-width:5}</style>\n";
  out << "<g class=\"grid\">\n";
  for (std::size_t x = 0; x <= cols; ++x) {
    out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(rows)
        << "\"/>\n";
  }
  for (std::size_t y = 0; y <= rows; ++y) {
    out << "<line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(cols) << "\" y2=\"" << py(y)
        << "\"/>\n";
  }
  out << "</g>\n";
  const std::size_t diag = cols < rows ? cols : rows;
  out << "<line class=\"diagonal\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(diag) << "\" y2=\""
      << py(diag) << "\"/>\n";
  std::size_t x = 0;
  std::size_t y = 0;
  for (const Step s : path.steps) {
    const std::size_t nx = s == Step::kRight ? x + 1 : x;
    const std::size_t ny = s == Step::kRight ? y : y + 1;
    out << "<line class=\"" << (s == Step::kUpBounce ? "step bounce" : "step") << "\" x1=\"" << px(x) << "\" y1=\""
        << py(y) << "\" x2=\"" << px(nx) << "\" y2=\"" << py(ny) << "\"/>\n";
    x = nx;
    y = ny;
  }
  out << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"4\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace merging::svg
