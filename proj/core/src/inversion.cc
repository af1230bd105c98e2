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

#include "apollonius/inversion.h"

#include <algorithm>
#include <cmath>

namespace apollonius {

Vec2 InversionMap::apply(Vec2 p) const {
  const Vec2 w = p - center;
  return center + w * (power / w.norm2());
}

namespace {

GeneralizedCircle oriented_line(Vec2 normal, double offset) {
  if (normal.y < 0.0 || (normal.y == 0.0 && normal.x < 0.0)) {
    normal = -normal;
    offset = -offset;
  }
  return Line{normal, offset};
}

}  // namespace

GeneralizedCircle invert(const GeneralizedCircle& obj, const InversionMap& m,
                         const Tolerance& tol) {
  const double eps = tol.eps();
  switch (obj.kind()) {
    case ObjectKind::kInfinity:
      return FinitePoint{m.center};
    case ObjectKind::kPoint: {
      const Vec2 p = obj.as_point().at;
      if (distance(p, m.center) <= eps) return PointAtInfinity{};
      return FinitePoint{m.apply(p)};
    }
    case ObjectKind::kLine: {
      const Line& l = obj.as_line();
      const double delta = l.signed_distance(m.center);
      if (std::abs(delta) <= eps) return obj;
      // The foot of the perpendicular from the center maps to the far end of
      // a diameter whose other end is the center itself.
      return Circle{m.center - l.normal * (m.power / (2.0 * delta)),
                    std::abs(m.power) / (2.0 * std::abs(delta))};
    }
    case ObjectKind::kCircle: {
      const Circle& c = obj.as_circle();
      const Vec2 w = c.center - m.center;
      const double w2 = w.norm2();
      const double w_len = std::sqrt(w2);
      if (std::abs(w_len - c.radius) <= eps) {
        // Circle through the center: image is the line perpendicular to w
        // through the image of the diametrically opposite point.
        const Vec2 n = w / w_len;
        const Vec2 far_image = m.center + w * (m.power / (2.0 * w2));
        return oriented_line(n, dot(n, far_image));
      }
      const double pw = w2 - c.radius * c.radius;
      return Circle{m.center + w * (m.power / pw),
                    std::abs(m.power) * c.radius / std::abs(pw)};
    }
  }
  return obj;
}

std::pair<Vec2, Vec2> limiting_points(const GeneralizedCircle& a,
                                      const GeneralizedCircle& b,
                                      const Tolerance& tol) {
  if (a.is_any_point() || b.is_any_point() || (a.is_line() && b.is_line()) ||
      intersection_count(a, b, tol) != 0) {
    throw GeometryError(ErrorCode::kNotDisjoint,
                        "limiting points need two disjoint objects");
  }
  if (a.is_circle() && b.is_circle()) {
    const Circle& p = a.as_circle();
    const Circle& q = b.as_circle();
    const Vec2 delta = q.center - p.center;
    const double d = delta.norm();
    if (d <= tol.eps()) return {p.center, p.center};
    const Vec2 u = delta / d;
    // Radical axis sits at distance h from p.center along u; every member of
    // the pencil has the same power K at the axis foot.
    const double h =
        (d * d + p.radius * p.radius - q.radius * q.radius) / (2.0 * d);
    const double k = std::sqrt(std::max(0.0, h * h - p.radius * p.radius));
    return {p.center + u * (h - k), p.center + u * (h + k)};
  }
  const Circle& c = a.is_circle() ? a.as_circle() : b.as_circle();
  const Line& l = a.is_line() ? a.as_line() : b.as_line();
  const double sd = l.signed_distance(c.center);
  const Vec2 foot = c.center - l.normal * sd;
  const double k = std::sqrt(std::max(0.0, sd * sd - c.radius * c.radius));
  const Vec2 toward = l.normal * (sd >= 0.0 ? 1.0 : -1.0);
  return {foot + toward * k, foot - toward * k};
}

namespace {

double boundary_clearance(Vec2 p, const GeneralizedCircle& obj) {
  if (obj.is_circle()) {
    return std::abs(distance(p, obj.as_circle().center) -
                    obj.as_circle().radius);
  }
  return std::abs(obj.as_line().signed_distance(p));
}

bool concentric(const GeneralizedCircle& a, const GeneralizedCircle& b,
                const Tolerance& tol) {
  return a.is_circle() && b.is_circle() &&
         distance(a.as_circle().center, b.as_circle().center) <= tol.eps();
}

}  // namespace

ConcentricMap map_to_concentric(const GeneralizedCircle& a,
                                const GeneralizedCircle& b,
                                const Tolerance& tol) {
  const auto [l1, l2] = limiting_points(a, b, tol);
  if (concentric(a, b, tol)) {
    return {NormalFormMap{}, a.as_circle().center};
  }
  const double c1 =
      std::min(boundary_clearance(l1, a), boundary_clearance(l1, b));
  const double c2 =
      std::min(boundary_clearance(l2, a), boundary_clearance(l2, b));
  const Vec2 pick = c1 >= c2 ? l1 : l2;
  const double clearance = std::max(c1, c2);
  const InversionMap m{pick, clearance * clearance};
  const GeneralizedCircle image = invert(a, m, tol);
  Vec2 center = m.center;
  if (image.is_circle()) center = image.as_circle().center;
  return {NormalFormMap{m}, center};
}

NormalFormMap map_to_intersecting_lines(const GeneralizedCircle& a,
                                        const GeneralizedCircle& b,
                                        const Tolerance& tol) {
  if (a.is_any_point() || b.is_any_point() ||
      intersection_count(a, b, tol) != 2) {
    throw GeometryError(ErrorCode::kNotIntersecting,
                        "objects do not meet in two points");
  }
  if (a.is_line() && b.is_line()) return {};
  for (const auto& p : intersection_points(a, b, tol)) {
    if (p.is_point()) {
      const double s = tol.relative_scale;
      return {InversionMap{p.as_point().at, s * s}};
    }
  }
  throw GeometryError(ErrorCode::kNotIntersecting, "no finite common point");
}

NormalFormMap map_to_parallel_lines(const GeneralizedCircle& a,
                                    const GeneralizedCircle& b,
                                    const Tolerance& tol) {
  if (a.is_any_point() || b.is_any_point() ||
      !is_tangent(tangency(a, b, tol))) {
    throw GeometryError(ErrorCode::kNotTangent, "objects are not tangent");
  }
  if (a.is_line() && b.is_line()) return {};
  const auto points = intersection_points(a, b, tol);
  if (points.empty() || !points.front().is_point()) {
    throw GeometryError(ErrorCode::kNotTangent, "no finite touching point");
  }
  const double s = tol.relative_scale;
  return {InversionMap{points.front().as_point().at, s * s}};
}

InversionMap fixing_inversion(const Circle& c, Vec2 p, const Tolerance& tol) {
  const double d = distance(p, c.center);
  if (std::abs(d - c.radius) <= tol.eps()) {
    throw GeometryError(ErrorCode::kPointOnCircle,
                        "fixing inversion centered on the circle");
  }
  return {p, d * d - c.radius * c.radius};
}

}  // namespace apollonius
