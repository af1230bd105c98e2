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

#include "apollonius/classify.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace apollonius {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Relation of alpha with a frame line.
enum class Relation { kDisjoint, kTangent, kIntersecting };

Relation relation(const GeneralizedCircle& a, const GeneralizedCircle& b,
                  const Tolerance& tol) {
  if (is_tangent(tangency(a, b, tol))) return Relation::kTangent;
  return intersection_count(a, b, tol) == 2 ? Relation::kIntersecting
                                            : Relation::kDisjoint;
}

void require_alpha(const GeneralizedCircle& alpha, const Line& l1,
                   const Line& l2, const Tolerance& tol) {
  if (alpha.is_any_point()) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "alpha must be a circle or a line");
  }
  if (approx_equal(alpha, GeneralizedCircle(l1), tol.eps()) ||
      approx_equal(alpha, GeneralizedCircle(l2), tol.eps())) {
    throw GeometryError(ErrorCode::kAlphaCoincidesWithLine,
                        "alpha coincides with a frame line");
  }
}

// Sector index 0..3 in ray order for a direction angle.
int raw_sector(const std::array<double, 4>& rays, double angle) {
  angle = wrap_angle(angle);
  for (int k = 0; k < 4; ++k) {
    const double start = rays[k];
    const double gap = wrap_angle(rays[(k + 1) % 4] - start);
    if (wrap_angle(angle - start) < gap) return k;
  }
  return 3;
}

double bisector(const std::array<double, 4>& rays, int k) {
  return wrap_angle(rays[k] + wrap_angle(rays[(k + 1) % 4] - rays[k]) / 2.0);
}

double angular_gap(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, kTwoPi - d);
}

int first_raw_sector(const SectorFrame& frame,
                     const std::array<double, 4>& rays) {
  int best = 0;
  double best_gap = kTwoPi;
  for (int k = 0; k < 4; ++k) {
    const double gap = angular_gap(bisector(rays, k), frame.first_bisector);
    if (gap < best_gap) {
      best_gap = gap;
      best = k;
    }
  }
  return best;
}

// Ray from `origin` along `dir` (unit) meets alpha.
bool ray_meets(Vec2 origin, Vec2 dir, const GeneralizedCircle& alpha,
               const Tolerance& tol) {
  const double eps = tol.eps();
  if (alpha.is_line()) {
    const Line& l = alpha.as_line();
    const double denom = dot(l.normal, dir);
    const double sd = l.signed_distance(origin);
    if (std::abs(sd) <= eps) return true;
    if (std::abs(denom) <= tol.length_eps) return false;
    return -sd / denom >= 0.0;
  }
  const Circle& c = alpha.as_circle();
  const Vec2 w = origin - c.center;
  const double b = dot(w, dir);
  const double q = w.norm2() - c.radius * c.radius;
  const double disc = b * b - q;
  if (disc < -2.0 * eps * c.radius) return false;
  const double root = std::sqrt(std::max(0.0, disc));
  return -b + root >= -eps;
}

}  // namespace

std::string FitzgeraldLabel::to_string() const {
  std::string letters;
  if (separated) letters += "S";
  letters += std::string(intersecting, 'I');
  letters += std::string(tangent, 'T');
  if (letters.empty()) return bracketed ? "[]" : "∅";
  return bracketed ? "[" + letters + "]" : letters;
}

FitzgeraldLabel fitzgerald_label(const GeneralizedCircle& a,
                                 const GeneralizedCircle& b,
                                 const GeneralizedCircle& c,
                                 const Tolerance& tol) {
  FitzgeraldLabel label;
  const std::array<const GeneralizedCircle*, 3> objs{&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (objs[i]->is_any_point() || objs[j]->is_any_point()) {
        throw GeometryError(ErrorCode::kInvalidParams,
                            "labels are defined for circles and lines");
      }
      const Relation r = relation(*objs[i], *objs[j], tol);
      if (r == Relation::kTangent) ++label.tangent;
      if (r == Relation::kIntersecting) ++label.intersecting;
    }
  }
  label.bracketed = !common_point_of_three(a, b, c, tol).empty();
  for (int s = 0; s < 3 && !label.bracketed && !label.separated; ++s) {
    const Side p = side_of(*objs[s], *objs[(s + 1) % 3], tol);
    const Side q = side_of(*objs[s], *objs[(s + 2) % 3], tol);
    const bool closed = (p == Side::kInside || p == Side::kOutside) &&
                        (q == Side::kInside || q == Side::kOutside);
    if (closed && p != q) label.separated = true;
  }
  return label;
}

SectorFrame SectorFrame::make(const Line& l1, const Line& l2) {
  SectorFrame f = make(l1, l2, 0.0);
  const auto rays = f.ray_angles();
  double best = kTwoPi;
  for (int k = 0; k < 4; ++k) best = std::min(best, bisector(rays, k));
  f.first_bisector = best;
  return f;
}

SectorFrame SectorFrame::make(const Line& l1, const Line& l2,
                              double first_bisector) {
  const double det = cross(l1.normal, l2.normal);
  if (std::abs(det) <= 1e-12) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "sector frame needs crossing lines");
  }
  SectorFrame f;
  f.l1 = l1;
  f.l2 = l2;
  f.vertex = Vec2{(l1.offset * l2.normal.y - l2.offset * l1.normal.y) / det,
                  (l1.normal.x * l2.offset - l2.normal.x * l1.offset) / det};
  f.first_bisector = wrap_angle(first_bisector);
  return f;
}

std::array<double, 4> SectorFrame::ray_angles() const {
  const Vec2 d1 = l1.direction();
  const Vec2 d2 = l2.direction();
  std::array<double, 4> out{
      wrap_angle(std::atan2(d1.y, d1.x)), wrap_angle(std::atan2(-d1.y, -d1.x)),
      wrap_angle(std::atan2(d2.y, d2.x)), wrap_angle(std::atan2(-d2.y, -d2.x))};
  std::sort(out.begin(), out.end());
  return out;
}

int sector_of(const Circle& c, const SectorFrame& frame, const Tolerance& tol) {
  const GeneralizedCircle g(c);
  if (tangency(g, frame.l1, tol) != TangencyKind::kLineTangent ||
      tangency(g, frame.l2, tol) != TangencyKind::kLineTangent) {
    throw GeometryError(ErrorCode::kNotAdmissible,
                        "circle is not tangent to both frame lines");
  }
  const auto rays = frame.ray_angles();
  const Vec2 w = c.center - frame.vertex;
  const int k = raw_sector(rays, std::atan2(w.y, w.x));
  return (k - first_raw_sector(frame, rays) + 4) % 4 + 1;
}

std::string Distribution::to_string() const {
  if (parallel) {
    return std::to_string(circles) + "+" +
           (infinite_lines ? std::string("∞") : std::to_string(lines));
  }
  return std::to_string(sectors[0]) + "-" + std::to_string(sectors[1]) + "-" +
         std::to_string(sectors[2]) + "-" + std::to_string(sectors[3]);
}

std::array<int, 4> Distribution::canonical_sectors() const {
  std::array<int, 4> best = sectors;
  for (int flip = 0; flip < 2; ++flip) {
    for (int shift = 0; shift < 4; ++shift) {
      std::array<int, 4> img{};
      for (int i = 0; i < 4; ++i) {
        const int src = flip ? (shift - i + 4) % 4 : (shift + i) % 4;
        img[i] = sectors[src];
      }
      best = std::max(best, img);
    }
  }
  return best;
}

bool Distribution::isomorphic(const Distribution& other) const {
  if (parallel != other.parallel) return false;
  if (parallel) {
    return circles == other.circles && infinite_lines == other.infinite_lines &&
           (infinite_lines || lines == other.lines);
  }
  return canonical_sectors() == other.canonical_sectors();
}

Distribution Distribution::of_sectors(std::array<int, 4> counts) {
  Distribution d;
  d.sectors = counts;
  return d;
}

Distribution Distribution::of_parallel(int circles, int lines) {
  Distribution d;
  d.parallel = true;
  d.circles = circles;
  d.lines = lines;
  return d;
}

Distribution distribution(const SolutionSet& solutions,
                          const SectorFrame& frame, const Tolerance& tol) {
  Distribution d;
  for (const auto& s : solutions.solutions) {
    if (!s.object.is_circle()) continue;
    const Tolerance wide = tol.widened_for(s.object);
    ++d.sectors[sector_of(s.object.as_circle(), frame, wide) - 1];
  }
  return d;
}

Distribution parallel_distribution(const SolutionSet& solutions, const Line& l1,
                                   const Line& l2, const Tolerance& tol) {
  Distribution d;
  d.parallel = true;
  d.infinite_lines = solutions.infinite;
  for (const auto& s : solutions.solutions) {
    if (s.object.is_circle()) {
      const Tolerance wide = tol.widened_for(s.object);
      if (tangency(s.object, l1, wide) != TangencyKind::kLineTangent ||
          tangency(s.object, l2, wide) != TangencyKind::kLineTangent) {
        throw GeometryError(ErrorCode::kNotAdmissible,
                            "circle is not tangent to both lines");
      }
      ++d.circles;
    } else if (s.object.is_line()) {
      ++d.lines;
    }
  }
  return d;
}

ITypeResult i_type(const SectorFrame& frame, const GeneralizedCircle& alpha,
                   const Tolerance& tol) {
  require_alpha(alpha, frame.l1, frame.l2, tol);
  const GeneralizedCircle l1(frame.l1);
  const GeneralizedCircle l2(frame.l2);
  const Relation r1 = relation(alpha, l1, tol);
  const Relation r2 = relation(alpha, l2, tol);
  const auto n_common = common_point_of_three(l1, l2, alpha, tol).size();
  auto count = [&](Relation r) {
    return static_cast<int>(r1 == r) + static_cast<int>(r2 == r);
  };
  const int n_int = count(Relation::kIntersecting);
  const int n_tan = count(Relation::kTangent);

  ITypeResult out;
  if (n_int == 2) {
    if (n_common == 0) {
      // Alpha is a circle here: lines always share infinity.
      const Circle& c = alpha.as_circle();
      const bool splits = distance(c.center, frame.vertex) < c.radius;
      out.row = splits ? 1 : 2;
    } else {
      out.row = n_common == 1 ? 5 : 6;
    }
  } else if (n_int == 1 && n_tan == 0) {
    out.row = 3;
  } else if (n_int == 0 && n_tan == 0) {
    out.row = 4;
  } else if (n_int == 1 && n_tan == 1) {
    out.row = n_common > 0 ? 10 : 7;
  } else if (n_tan == 1) {
    out.row = 8;
  } else {
    out.row = 9;
  }

  out.label = fitzgerald_label(l1, l2, alpha, tol);
  const std::vector<GeneralizedCircle> objs{l1, l2, alpha};
  out.solutions = solve(objs, tol);
  out.distribution = distribution(out.solutions, frame, tol);
  for (const auto& s : out.solutions.solutions) {
    if (s.object.is_any_point()) out.extra_points.push_back(s.object);
  }
  out.total = static_cast<int>(out.solutions.size());
  return out;
}

TTypeResult t_type(const Line& l1, const Line& l2,
                   const GeneralizedCircle& alpha, const Tolerance& tol) {
  if (std::abs(cross(l1.normal, l2.normal)) > tol.length_eps) {
    throw GeometryError(ErrorCode::kInvalidParams, "lines are not parallel");
  }
  require_alpha(alpha, l1, l2, tol);
  const GeneralizedCircle g1(l1);
  const GeneralizedCircle g2(l2);
  TTypeResult out;
  out.label = fitzgerald_label(g1, g2, alpha, tol);

  if (alpha.is_line()) {
    const bool parallel =
        std::abs(cross(alpha.as_line().normal, l1.normal)) <= tol.length_eps;
    out.row = parallel ? 10 : 4;
  } else {
    const Relation r1 = relation(alpha, g1, tol);
    const Relation r2 = relation(alpha, g2, tol);
    const Vec2 c = alpha.as_circle().center;
    const double s1 = l1.signed_distance(c);
    const double s2 =
        l2.signed_distance(c) * (dot(l1.normal, l2.normal) >= 0.0 ? 1.0 : -1.0);
    const bool inside = (s1 > 0.0) != (s2 > 0.0);
    auto count = [&](Relation r) {
      return static_cast<int>(r1 == r) + static_cast<int>(r2 == r);
    };
    const int n_int = count(Relation::kIntersecting);
    const int n_tan = count(Relation::kTangent);
    if (n_int == 0 && n_tan == 0) {
      out.row = inside ? 1 : 9;
    } else if (n_int == 2) {
      out.row = 2;
    } else if (n_int == 1 && n_tan == 0) {
      out.row = 3;
    } else if (n_int == 0 && n_tan == 1) {
      out.row = inside ? 5 : 8;
    } else if (n_int == 1 && n_tan == 1) {
      out.row = 6;
    } else {
      out.row = 7;
    }
  }

  const std::vector<GeneralizedCircle> objs{g1, g2, alpha};
  out.solutions = solve(objs, tol);
  out.infinite = out.solutions.infinite;
  out.distribution = parallel_distribution(out.solutions, l1, l2, tol);
  for (const auto& s : out.solutions.solutions) {
    if (s.object.is_any_point()) out.extra_points.push_back(s.object);
  }
  out.total = out.distribution.circles + out.distribution.lines;
  return out;
}

std::string roman(int row) {
  static const char* kNames[] = {"?",  "I",   "II",   "III", "IV", "V",
                                 "VI", "VII", "VIII", "IX",  "X"};
  return (row >= 1 && row <= 10) ? kNames[row] : kNames[0];
}

bool meets_both_sides_of_a_sector(const SectorFrame& frame,
                                  const GeneralizedCircle& alpha,
                                  const Tolerance& tol) {
  const auto rays = frame.ray_angles();
  std::array<bool, 4> meets{};
  for (int k = 0; k < 4; ++k) {
    meets[k] = ray_meets(
        frame.vertex, Vec2{std::cos(rays[k]), std::sin(rays[k])}, alpha, tol);
  }
  for (int k = 0; k < 4; ++k) {
    if (meets[k] && meets[(k + 1) % 4]) return true;
  }
  return false;
}

std::string to_string(AnnulusKind kind) {
  return kind == AnnulusKind::kA ? "A" : "B";
}

AnnulusKind annulus_kind(const GeneralizedCircle& s, const Circle& inner,
                         const Circle& outer, const Tolerance& tol) {
  if (distance(inner.center, outer.center) > tol.eps() ||
      inner.radius >= outer.radius) {
    throw GeometryError(ErrorCode::kNotAdmissible,
                        "inner and outer must be concentric, inner smaller");
  }
  const TangencyKind to_inner = tangency(s, inner, tol);
  const TangencyKind to_outer = tangency(s, outer, tol);
  if (!is_tangent(to_inner) || !is_tangent(to_outer) || !s.is_circle()) {
    throw GeometryError(ErrorCode::kNotAdmissible,
                        "object does not touch both annulus circles");
  }
  return to_inner == TangencyKind::kExternalCircle ? AnnulusKind::kA
                                                   : AnnulusKind::kB;
}

}  // namespace apollonius
