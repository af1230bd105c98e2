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

#include "apollonius/geometry.h"

#include <algorithm>
#include <cfloat>
#include <cstdio>
#include <limits>

namespace apollonius {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonFiniteCoordinate:
      return "NonFiniteCoordinate";
    case ErrorCode::kDegenerateRadius:
      return "DegenerateRadius";
    case ErrorCode::kDegenerateLine:
      return "DegenerateLine";
    case ErrorCode::kCoincident:
      return "Coincident";
    case ErrorCode::kNotDisjoint:
      return "NotDisjoint";
    case ErrorCode::kNotIntersecting:
      return "NotIntersecting";
    case ErrorCode::kNotTangent:
      return "NotTangent";
    case ErrorCode::kPointOnCircle:
      return "PointOnCircle";
    case ErrorCode::kDegenerateInput:
      return "DegenerateInput";
    case ErrorCode::kTooFewObjects:
      return "TooFewObjects";
    case ErrorCode::kNotASolution:
      return "NotASolution";
    case ErrorCode::kAlphaCoincidesWithLine:
      return "AlphaCoincidesWithLine";
    case ErrorCode::kNotAdmissible:
      return "NotAdmissible";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kNoFeasibleGamma:
      return "NoFeasibleGamma";
    case ErrorCode::kUnknownScenario:
      return "UnknownScenario";
  }
  return "Unknown";
}

std::string to_string(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::kCircle:
      return "circle";
    case ObjectKind::kLine:
      return "line";
    case ObjectKind::kPoint:
      return "point";
    case ObjectKind::kInfinity:
      return "infinity";
  }
  return "unknown";
}

std::string to_string(TangencyKind kind) {
  switch (kind) {
    case TangencyKind::kNone:
      return "none";
    case TangencyKind::kExternalCircle:
      return "external";
    case TangencyKind::kInternalCircle:
      return "internal";
    case TangencyKind::kLineTangent:
      return "line";
    case TangencyKind::kParallelLines:
      return "parallel";
    case TangencyKind::kPointIncidence:
      return "incidence";
    case TangencyKind::kCoincident:
      return "coincident";
  }
  return "unknown";
}

GeneralizedCircle GeneralizedCircle::line_through(Vec2 p, Vec2 dir) {
  const double len = dir.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw GeometryError(ErrorCode::kDegenerateLine, "zero line direction");
  }
  const Vec2 n = dir.perp() / len;
  return Line{n, dot(n, p)};
}

std::string GeneralizedCircle::debug_string() const {
  char buf[160];
  switch (kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = as_circle();
      std::snprintf(buf, sizeof(buf), "Circle{(%.12g, %.12g), r=%.12g}",
                    c.center.x, c.center.y, c.radius);
      break;
    }
    case ObjectKind::kLine: {
      const Line& l = as_line();
      std::snprintf(buf, sizeof(buf), "Line{n=(%.12g, %.12g), c=%.12g}",
                    l.normal.x, l.normal.y, l.offset);
      break;
    }
    case ObjectKind::kPoint:
      std::snprintf(buf, sizeof(buf), "Point{(%.12g, %.12g)}", as_point().at.x,
                    as_point().at.y);
      break;
    case ObjectKind::kInfinity:
      std::snprintf(buf, sizeof(buf), "Infinity");
      break;
  }
  return buf;
}

double object_extent(const GeneralizedCircle& obj) {
  switch (obj.kind()) {
    case ObjectKind::kCircle:
      return obj.as_circle().center.norm() + obj.as_circle().radius;
    case ObjectKind::kLine:
      return std::abs(obj.as_line().offset);
    case ObjectKind::kPoint:
      return obj.as_point().at.norm();
    case ObjectKind::kInfinity:
      return 0.0;
  }
  return 0.0;
}

Tolerance Tolerance::for_objects(std::span<const GeneralizedCircle> objects,
                                 double length_eps) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto grow = [&](Vec2 p, double pad) {
    lo_x = std::min(lo_x, p.x - pad);
    lo_y = std::min(lo_y, p.y - pad);
    hi_x = std::max(hi_x, p.x + pad);
    hi_y = std::max(hi_y, p.y + pad);
  };
  for (const auto& obj : objects) {
    switch (obj.kind()) {
      case ObjectKind::kCircle:
        grow(obj.as_circle().center, std::abs(obj.as_circle().radius));
        break;
      case ObjectKind::kLine:
        grow(obj.as_line().foot(), 0.0);
        break;
      case ObjectKind::kPoint:
        grow(obj.as_point().at, 0.0);
        break;
      case ObjectKind::kInfinity:
        break;
    }
  }
  double diameter = 0.0;
  if (hi_x >= lo_x) diameter = std::hypot(hi_x - lo_x, hi_y - lo_y);
  Tolerance tol;
  tol.length_eps = length_eps;
  tol.relative_scale = std::max(1.0, diameter);
  return tol;
}

Tolerance Tolerance::widened_for(const GeneralizedCircle& obj) const {
  Tolerance out = *this;
  out.relative_scale = std::max(relative_scale, object_extent(obj));
  return out;
}

namespace {

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(bool ok, const char* what) {
  if (!ok) throw GeometryError(ErrorCode::kNonFiniteCoordinate, what);
}

// Dimensionless threshold for parallel normals.
double angular_eps(const Tolerance& tol) { return tol.length_eps; }

bool parallel(const Line& a, const Line& b, const Tolerance& tol) {
  return std::abs(cross(a.normal, b.normal)) <= angular_eps(tol);
}

// Offset of `b` expressed along `a`'s normal (assumes parallel lines).
double aligned_offset(const Line& a, const Line& b) {
  return dot(a.normal, b.normal) >= 0.0 ? b.offset : -b.offset;
}

}  // namespace

GeneralizedCircle normalize(const GeneralizedCircle& raw, const Tolerance& tol,
                            bool allow_point) {
  switch (raw.kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = raw.as_circle();
      require_finite(finite(c.center) && std::isfinite(c.radius),
                     "circle has a non-finite field");
      const double r = std::abs(c.radius);
      if (r <= tol.eps()) {
        if (allow_point) return FinitePoint{c.center};
        throw GeometryError(ErrorCode::kDegenerateRadius,
                            "circle radius below tolerance");
      }
      return Circle{c.center, r};
    }
    case ObjectKind::kLine: {
      const Line& l = raw.as_line();
      require_finite(finite(l.normal) && std::isfinite(l.offset),
                     "line has a non-finite field");
      Vec2 n = l.normal;
      double c = l.offset;
      const double n2 = n.norm2();
      if (n2 == 0.0) {
        throw GeometryError(ErrorCode::kDegenerateLine, "zero line normal");
      }
      // Leave already-unit normals bit-for-bit alone so normalize is
      // idempotent.
      if (std::abs(n2 - 1.0) > 4.0 * DBL_EPSILON) {
        const double len = std::sqrt(n2);
        n = n / len;
        c = c / len;
      }
      if (n.y < 0.0 || (n.y == 0.0 && n.x < 0.0)) {
        n = -n;
        c = -c;
      }
      if (n.x == 0.0) n.x = 0.0;  // drop -0.0
      if (n.y == 0.0) n.y = 0.0;
      return Line{n, c};
    }
    case ObjectKind::kPoint:
      require_finite(finite(raw.as_point().at), "point is not finite");
      return raw;
    case ObjectKind::kInfinity:
      return raw;
  }
  return raw;
}

bool approx_equal(const GeneralizedCircle& a, const GeneralizedCircle& b,
                  double radius) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjectKind::kCircle: {
      const Circle& p = a.as_circle();
      const Circle& q = b.as_circle();
      return distance(p.center, q.center) <= radius &&
             std::abs(p.radius - q.radius) <= radius;
    }
    case ObjectKind::kLine: {
      const Line& p = a.as_line();
      const Line& q = b.as_line();
      const double s = dot(p.normal, q.normal) >= 0.0 ? 1.0 : -1.0;
      // Compare the feet and directions: both are lengths after scaling by
      // the offset magnitude.
      const double scale =
          std::max(1.0, std::max(std::abs(p.offset), std::abs(q.offset)));
      return (p.normal - q.normal * s).norm() * scale <= radius &&
             std::abs(p.offset - s * q.offset) <= radius;
    }
    case ObjectKind::kPoint:
      return distance(a.as_point().at, b.as_point().at) <= radius;
    case ObjectKind::kInfinity:
      return true;
  }
  return false;
}

TangencyKind tangency(const GeneralizedCircle& a, const GeneralizedCircle& b,
                      const Tolerance& tol) {
  const double eps = tol.eps();
  auto coincident = []() -> TangencyKind {
    throw GeometryError(ErrorCode::kCoincident,
                        "tangency of an object with itself");
  };
  // Order the pair so that kind(a) <= kind(b).
  if (static_cast<int>(a.kind()) > static_cast<int>(b.kind())) {
    return tangency(b, a, tol);
  }
  switch (a.kind()) {
    case ObjectKind::kCircle: {
      const Circle& p = a.as_circle();
      switch (b.kind()) {
        case ObjectKind::kCircle: {
          const Circle& q = b.as_circle();
          const double d = distance(p.center, q.center);
          if (d <= eps && std::abs(p.radius - q.radius) <= eps) {
            return coincident();
          }
          if (std::abs(d - (p.radius + q.radius)) <= eps) {
            return TangencyKind::kExternalCircle;
          }
          if (std::abs(d - std::abs(p.radius - q.radius)) <= eps) {
            return TangencyKind::kInternalCircle;
          }
          return TangencyKind::kNone;
        }
        case ObjectKind::kLine: {
          const double dist = std::abs(b.as_line().signed_distance(p.center));
          return std::abs(dist - p.radius) <= eps ? TangencyKind::kLineTangent
                                                  : TangencyKind::kNone;
        }
        case ObjectKind::kPoint: {
          const double d = distance(p.center, b.as_point().at);
          return std::abs(d - p.radius) <= eps ? TangencyKind::kPointIncidence
                                               : TangencyKind::kNone;
        }
        case ObjectKind::kInfinity:
          return TangencyKind::kNone;
      }
      break;
    }
    case ObjectKind::kLine: {
      const Line& p = a.as_line();
      switch (b.kind()) {
        case ObjectKind::kLine: {
          const Line& q = b.as_line();
          if (!parallel(p, q, tol)) return TangencyKind::kNone;
          if (std::abs(p.offset - aligned_offset(p, q)) <= eps) {
            return coincident();
          }
          return TangencyKind::kParallelLines;
        }
        case ObjectKind::kPoint:
          return std::abs(p.signed_distance(b.as_point().at)) <= eps
                     ? TangencyKind::kPointIncidence
                     : TangencyKind::kNone;
        case ObjectKind::kInfinity:
          return TangencyKind::kPointIncidence;
        default:
          break;
      }
      break;
    }
    case ObjectKind::kPoint: {
      if (b.is_point() && distance(a.as_point().at, b.as_point().at) <= eps) {
        return coincident();
      }
      return TangencyKind::kNone;
    }
    case ObjectKind::kInfinity:
      return coincident();
  }
  return TangencyKind::kNone;
}

int intersection_count(const GeneralizedCircle& a, const GeneralizedCircle& b,
                       const Tolerance& tol) {
  if (a.is_any_point() || b.is_any_point()) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "intersection_count expects circles or lines");
  }
  if (is_tangent(tangency(a, b, tol))) return 1;
  const double eps = tol.eps();
  if (a.is_line() && b.is_line()) return 2;  // crossing lines: P and infinity
  if (a.is_circle() && b.is_circle()) {
    const Circle& p = a.as_circle();
    const Circle& q = b.as_circle();
    const double d = distance(p.center, q.center);
    if (d > p.radius + q.radius + eps) return 0;
    if (d < std::abs(p.radius - q.radius) - eps) return 0;
    return 2;
  }
  const Circle& c = a.is_circle() ? a.as_circle() : b.as_circle();
  const Line& l = a.is_line() ? a.as_line() : b.as_line();
  return std::abs(l.signed_distance(c.center)) > c.radius + eps ? 0 : 2;
}

bool lies_on(const GeneralizedCircle& point, const GeneralizedCircle& obj,
             const Tolerance& tol) {
  if (point.is_infinity()) return obj.is_line();
  if (!point.is_point()) return false;
  const Vec2 p = point.as_point().at;
  switch (obj.kind()) {
    case ObjectKind::kCircle:
      return std::abs(distance(p, obj.as_circle().center) -
                      obj.as_circle().radius) <= tol.eps();
    case ObjectKind::kLine:
      return std::abs(obj.as_line().signed_distance(p)) <= tol.eps();
    case ObjectKind::kPoint:
      return distance(p, obj.as_point().at) <= tol.eps();
    case ObjectKind::kInfinity:
      return false;
  }
  return false;
}

namespace {

std::vector<GeneralizedCircle> circle_circle_points(const Circle& p,
                                                    const Circle& q,
                                                    TangencyKind kind) {
  const Vec2 delta = q.center - p.center;
  const double d = delta.norm();
  if (d == 0.0) return {};
  const Vec2 u = delta / d;
  if (kind == TangencyKind::kExternalCircle) {
    return {FinitePoint{p.center + u * p.radius}};
  }
  if (kind == TangencyKind::kInternalCircle) {
    // Touching point lies on the ray from the larger center through the
    // smaller one.
    if (p.radius >= q.radius) return {FinitePoint{p.center + u * p.radius}};
    return {FinitePoint{q.center - u * q.radius}};
  }
  const double along =
      (d * d + p.radius * p.radius - q.radius * q.radius) / (2.0 * d);
  const double h2 = p.radius * p.radius - along * along;
  if (h2 < 0.0) return {};
  const double h = std::sqrt(h2);
  const Vec2 base = p.center + u * along;
  return {FinitePoint{base + u.perp() * h}, FinitePoint{base - u.perp() * h}};
}

std::vector<GeneralizedCircle> circle_line_points(const Circle& c,
                                                  const Line& l,
                                                  TangencyKind kind) {
  const double sd = l.signed_distance(c.center);
  const Vec2 foot = c.center - l.normal * sd;
  if (kind == TangencyKind::kLineTangent) return {FinitePoint{foot}};
  const double h2 = c.radius * c.radius - sd * sd;
  if (h2 < 0.0) return {};
  const double h = std::sqrt(h2);
  const Vec2 dir = l.direction();
  return {FinitePoint{foot + dir * h}, FinitePoint{foot - dir * h}};
}

}  // namespace

std::vector<GeneralizedCircle> intersection_points(const GeneralizedCircle& a,
                                                   const GeneralizedCircle& b,
                                                   const Tolerance& tol) {
  if (a.is_any_point()) {
    if (lies_on(a, b, tol)) return {a};
    return {};
  }
  if (b.is_any_point()) return intersection_points(b, a, tol);
  const TangencyKind kind = tangency(a, b, tol);
  if (a.is_circle() && b.is_circle()) {
    if (kind == TangencyKind::kNone && intersection_count(a, b, tol) == 0) {
      return {};
    }
    return circle_circle_points(a.as_circle(), b.as_circle(), kind);
  }
  if (a.is_line() && b.is_line()) {
    if (kind == TangencyKind::kParallelLines) return {PointAtInfinity{}};
    const Line& p = a.as_line();
    const Line& q = b.as_line();
    const double det = cross(p.normal, q.normal);
    const Vec2 at{(p.offset * q.normal.y - q.offset * p.normal.y) / det,
                  (p.normal.x * q.offset - q.normal.x * p.offset) / det};
    return {FinitePoint{at}, PointAtInfinity{}};
  }
  const Circle& c = a.is_circle() ? a.as_circle() : b.as_circle();
  const Line& l = a.is_line() ? a.as_line() : b.as_line();
  if (kind == TangencyKind::kNone && intersection_count(a, b, tol) == 0) {
    return {};
  }
  return circle_line_points(c, l, kind);
}

Side side_of(const GeneralizedCircle& s, const GeneralizedCircle& obj,
             const Tolerance& tol) {
  const double eps = tol.eps();
  if (s.is_any_point()) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "separator must be a circle or a line");
  }
  if (obj.is_any_point()) {
    if (lies_on(obj, s, tol)) return Side::kOn;
    if (obj.is_infinity()) return Side::kOutside;  // s is a circle here
    const Vec2 p = obj.as_point().at;
    if (s.is_circle()) {
      return distance(p, s.as_circle().center) < s.as_circle().radius
                 ? Side::kInside
                 : Side::kOutside;
    }
    return s.as_line().signed_distance(p) < 0.0 ? Side::kInside
                                                : Side::kOutside;
  }
  if (intersection_count(s, obj, tol) == 2) return Side::kCrossing;
  if (s.is_circle()) {
    const Circle& sc = s.as_circle();
    if (obj.is_line()) return Side::kOutside;
    const Circle& oc = obj.as_circle();
    const double d = distance(sc.center, oc.center);
    // Not crossing: the object is inside iff it is smaller and its center
    // sits within the separator.
    if (oc.radius < sc.radius && d < sc.radius + eps &&
        d <= sc.radius - oc.radius + eps) {
      return Side::kInside;
    }
    return Side::kOutside;
  }
  const Line& sl = s.as_line();
  if (obj.is_circle()) {
    return sl.signed_distance(obj.as_circle().center) < 0.0 ? Side::kInside
                                                            : Side::kOutside;
  }
  const Line& ol = obj.as_line();
  // Parallel line (crossing lines were handled above).
  return aligned_offset(sl, ol) < sl.offset ? Side::kInside : Side::kOutside;
}

bool separates(const GeneralizedCircle& s, const GeneralizedCircle& a,
               const GeneralizedCircle& b, const Tolerance& tol) {
  const Side sa = side_of(s, a, tol);
  const Side sb = side_of(s, b, tol);
  if (sa == Side::kCrossing || sb == Side::kCrossing) {
    throw GeometryError(ErrorCode::kNotDisjoint,
                        "object crosses the separator");
  }
  auto touches = [&](const GeneralizedCircle& o) {
    if (o.is_any_point()) return lies_on(o, s, tol);
    return is_tangent(tangency(s, o, tol));
  };
  if (sa == Side::kOn || sb == Side::kOn || touches(a) || touches(b)) {
    return false;
  }
  return sa != sb;
}

std::vector<GeneralizedCircle> common_point_of_three(const GeneralizedCircle& a,
                                                     const GeneralizedCircle& b,
                                                     const GeneralizedCircle& c,
                                                     const Tolerance& tol) {
  std::vector<GeneralizedCircle> out;
  for (const auto& p : intersection_points(a, b, tol)) {
    if (lies_on(p, c, tol)) out.push_back(p);
  }
  return out;
}

}  // namespace apollonius
