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

#ifndef APOLLONIUS_GEOMETRY_H_
#define APOLLONIUS_GEOMETRY_H_

#include <cmath>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "apollonius/error.h"

namespace apollonius {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_in, double y_in) : x(x_in), y(y_in) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  constexpr double norm2() const { return x * x + y * y; }
  // Counter-clockwise quarter turn.
  constexpr Vec2 perp() const { return {-y, x}; }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Circle {
  Vec2 center;
  double radius = 1.0;
};

// Hesse normal form: the set {p : dot(normal, p) == offset}.
struct Line {
  Vec2 normal{0.0, 1.0};
  double offset = 0.0;

  Vec2 direction() const { return normal.perp(); }
  // Point of the line closest to the origin.
  Vec2 foot() const { return normal * offset; }
  double signed_distance(Vec2 p) const { return dot(normal, p) - offset; }
};

struct FinitePoint {
  Vec2 at;
};

struct PointAtInfinity {};

enum class ObjectKind { kCircle = 0, kLine = 1, kPoint = 2, kInfinity = 3 };

std::string to_string(ObjectKind kind);

// A circle, a line, a finite point or the point at infinity: the objects of
// the inversive plane. Values are immutable once built.
class GeneralizedCircle {
 public:
  using Variant = std::variant<Circle, Line, FinitePoint, PointAtInfinity>;

  GeneralizedCircle() : value_(PointAtInfinity{}) {}
  GeneralizedCircle(Circle c) : value_(c) {}           // NOLINT
  GeneralizedCircle(Line l) : value_(l) {}             // NOLINT
  GeneralizedCircle(FinitePoint p) : value_(p) {}      // NOLINT
  GeneralizedCircle(PointAtInfinity p) : value_(p) {}  // NOLINT

  static GeneralizedCircle circle(Vec2 center, double radius) {
    return Circle{center, radius};
  }
  static GeneralizedCircle circle(double cx, double cy, double radius) {
    return Circle{{cx, cy}, radius};
  }
  static GeneralizedCircle line(Vec2 normal, double offset) {
    return Line{normal, offset};
  }
  // Line through `p` with direction `dir` (any length).
  static GeneralizedCircle line_through(Vec2 p, Vec2 dir);
  static GeneralizedCircle point(Vec2 p) { return FinitePoint{p}; }
  static GeneralizedCircle point(double x, double y) {
    return FinitePoint{{x, y}};
  }
  static GeneralizedCircle infinity() { return PointAtInfinity{}; }

  ObjectKind kind() const { return static_cast<ObjectKind>(value_.index()); }
  bool is_circle() const { return kind() == ObjectKind::kCircle; }
  bool is_line() const { return kind() == ObjectKind::kLine; }
  bool is_point() const { return kind() == ObjectKind::kPoint; }
  bool is_infinity() const { return kind() == ObjectKind::kInfinity; }
  // Finite point or the point at infinity.
  bool is_any_point() const { return is_point() || is_infinity(); }

  const Circle& as_circle() const { return std::get<Circle>(value_); }
  const Line& as_line() const { return std::get<Line>(value_); }
  const FinitePoint& as_point() const { return std::get<FinitePoint>(value_); }

  const Variant& variant() const { return value_; }

  std::string debug_string() const;

 private:
  Variant value_;
};

// Scaled absolute tolerance. All comparisons use eps() = length_eps *
// relative_scale, where relative_scale tracks the configuration diameter.
struct Tolerance {
  double length_eps = 1e-9;
  double relative_scale = 1.0;

  double eps() const { return length_eps * relative_scale; }

  // relative_scale = max(1, bounding-box diameter of the finite parts).
  static Tolerance for_objects(std::span<const GeneralizedCircle> objects,
                               double length_eps = 1e-9);
  // Same length_eps with the scale grown to cover `obj` as well.
  Tolerance widened_for(const GeneralizedCircle& obj) const;
};

// Largest coordinate magnitude an object reaches (center norm + radius, line
// foot, point norm); 0 for infinity.
double object_extent(const GeneralizedCircle& obj);

enum class TangencyKind {
  kNone,
  kExternalCircle,
  kInternalCircle,
  kLineTangent,
  kParallelLines,
  kPointIncidence,
  kCoincident,
};

std::string to_string(TangencyKind kind);

// Canonical form: unit line normal with positive y (or y == 0 and positive
// x), positive circle radius. Idempotent. When `allow_point` is set a
// circle with |radius| <= eps becomes a FinitePoint instead of throwing.
GeneralizedCircle normalize(const GeneralizedCircle& raw, const Tolerance& tol,
                            bool allow_point = false);

// Geometric equality within `radius` (lines compared up to orientation).
bool approx_equal(const GeneralizedCircle& a, const GeneralizedCircle& b,
                  double radius);

// Generalized tangency. Throws kCoincident when a == b within tolerance.
TangencyKind tangency(const GeneralizedCircle& a, const GeneralizedCircle& b,
                      const Tolerance& tol);

inline bool is_tangent(TangencyKind k) {
  return k != TangencyKind::kNone && k != TangencyKind::kCoincident;
}

// Number of common points on the inversive plane of two circles/lines
// (0, 1 or 2). Throws kCoincident for equal objects.
int intersection_count(const GeneralizedCircle& a, const GeneralizedCircle& b,
                       const Tolerance& tol);

// The common points themselves (FinitePoint or PointAtInfinity values).
// Accepts any pair of objects; tangent pairs yield their touching point.
std::vector<GeneralizedCircle> intersection_points(const GeneralizedCircle& a,
                                                   const GeneralizedCircle& b,
                                                   const Tolerance& tol);

// True when the point (finite or infinite) lies on `obj`.
bool lies_on(const GeneralizedCircle& point, const GeneralizedCircle& obj,
             const Tolerance& tol);

// Strict separation: `s` splits the plane and a, b fall in different open
// components. Throws kNotDisjoint when a or b crosses s; an object merely
// touching s is not separated.
bool separates(const GeneralizedCircle& s, const GeneralizedCircle& a,
               const GeneralizedCircle& b, const Tolerance& tol);

// Which closed side of the separator `s` an object occupies.
enum class Side { kInside, kOutside, kCrossing, kOn };

// For a circle separator kInside is the bounded disk; for a line separator
// kInside is the negative half-plane (dot(n, p) < offset).
Side side_of(const GeneralizedCircle& s, const GeneralizedCircle& obj,
             const Tolerance& tol);

// Every point lying on all three objects (0, 1 or 2 of them).
std::vector<GeneralizedCircle> common_point_of_three(const GeneralizedCircle& a,
                                                     const GeneralizedCircle& b,
                                                     const GeneralizedCircle& c,
                                                     const Tolerance& tol);

}  // namespace apollonius

#endif  // APOLLONIUS_GEOMETRY_H_
