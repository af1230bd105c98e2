// Copyright 2026 The Apollonius Authors
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

#include "cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

namespace apollonius::cli {
namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Vec2 p, double r = 0.0) {
    x0 = std::min(x0, p.x - r);
    y0 = std::min(y0, p.y - r);
    x1 = std::max(x1, p.x + r);
    y1 = std::max(y1, p.y + r);
  }
  bool empty() const { return !(x0 <= x1); }
};

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // no "-0.0000"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// Liang-Barsky clip of p + t d against the box.
std::optional<std::pair<Vec2, Vec2>> clip(const Line& l, const Box& b) {
  const Vec2 p = l.foot();
  const Vec2 d = l.direction();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto side = [&](double q, double dv, double mn, double mx) {
    if (dv == 0.0) return q >= mn && q <= mx;
    double t0 = (mn - q) / dv;
    double t1 = (mx - q) / dv;
    if (t0 > t1) std::swap(t0, t1);
    lo = std::max(lo, t0);
    hi = std::min(hi, t1);
    return lo <= hi;
  };
  if (!side(p.x, d.x, b.x0, b.x1) || !side(p.y, d.y, b.y0, b.y1)) {
    return std::nullopt;
  }
  return std::make_pair(p + d * lo, p + d * hi);
}

void emit(std::ostringstream& out, const GeneralizedCircle& g, const Box& view,
          double marker) {
  // SVG y grows downward; world y is negated.
  switch (g.kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = g.as_circle();
      out << "    <circle cx=\"" << num(c.center.x) << "\" cy=\""
          << num(-c.center.y) << "\" r=\"" << num(c.radius) << "\"/>\n";
      break;
    }
    case ObjectKind::kLine: {
      const auto seg = clip(g.as_line(), view);
      if (!seg) break;
      out << "    <line x1=\"" << num(seg->first.x) << "\" y1=\""
          << num(-seg->first.y) << "\" x2=\"" << num(seg->second.x)
          << "\" y2=\"" << num(-seg->second.y) << "\"/>\n";
      break;
    }
    case ObjectKind::kPoint: {
      const Vec2 p = g.as_point().at;
      out << "    <circle class=\"point\" fill=\"currentColor\" cx=\""
          << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(marker)
          << "\"/>\n";
      break;
    }
    case ObjectKind::kInfinity:
      break;
  }
}

}  // namespace

std::string render_svg(std::span<const GeneralizedCircle> inputs,
                       std::span<const GeneralizedCircle> solutions) {
  Box box;
  bool inf_input = false;
  bool inf_solution = false;
  auto extend = [&](const GeneralizedCircle& g) {
    if (g.is_circle()) box.add(g.as_circle().center, g.as_circle().radius);
    if (g.is_point()) box.add(g.as_point().at);
    if (g.is_line()) box.add(g.as_line().foot());
  };
  for (const auto& g : inputs) {
    extend(g);
    inf_input = inf_input || g.is_infinity();
  }
  for (const auto& g : solutions) {
    extend(g);
    inf_solution = inf_solution || g.is_infinity();
  }
  if (box.empty()) box.add({0.0, 0.0});
  const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  if (box.x1 - box.x0 < 1e-9 * span || box.y1 - box.y0 < 1e-9 * span) {
    box.add({box.x0, box.y0}, 0.5 * span);
  }
  const double pad_x = 0.1 * (box.x1 - box.x0);
  const double pad_y = 0.1 * (box.y1 - box.y0);
  Box view{box.x0 - pad_x, box.y0 - pad_y, box.x1 + pad_x, box.y1 + pad_y};
  const double w = view.x1 - view.x0;
  const double h = view.y1 - view.y0;
  const double stroke = std::max(w, h) / 400.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"" << num(view.x0) << " " << num(-view.y1) << " " << num(w)
      << " " << num(h) << "\" width=\"600\" height=\"" << num(600.0 * h / w)
      << "\">\n";
  out << "  <g id=\"inputs\" fill=\"none\" color=\"black\" "
      << "stroke=\"currentColor\" stroke-width=\"" << num(stroke) << "\">\n";
  for (const auto& g : inputs) emit(out, g, view, 2.0 * stroke);
  out << "  </g>\n";
  out << "  <g id=\"solutions\" fill=\"none\" color=\"#c0392b\" "
      << "stroke=\"currentColor\" "
      << "stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\""
      << num(4.0 * stroke) << " " << num(3.0 * stroke) << "\">\n";
  for (const auto& g : solutions) emit(out, g, view, 2.0 * stroke);
  out << "  </g>\n";
  if (inf_input || inf_solution) {
    out << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\""
        << num(0.04 * h) << "\">\n";
    double y = -view.y1 + 0.06 * h;
    if (inf_input) {
      out << "    <text x=\"" << num(view.x0 + 0.02 * w) << "\" y=\"" << num(y)
          << "\">input: point at infinity</text>\n";
      y += 0.05 * h;
    }
    if (inf_solution) {
      out << "    <text x=\"" << num(view.x0 + 0.02 * w) << "\" y=\"" << num(y)
          << "\">solution: point at infinity</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace apollonius::cli
