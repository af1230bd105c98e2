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

#include "apollonius/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "apollonius/elimination.h"

namespace apollonius {

SignCombination SignCombination::negated() const {
  SignCombination out = *this;
  for (int& s : out.signs) s = -s;
  return out;
}

SignCombination SignCombination::canonical() const {
  if (!signs.empty() && signs.front() < 0) return negated();
  return *this;
}

bool SignCombination::same_class(const SignCombination& other) const {
  return canonical() == other.canonical();
}

std::string SignCombination::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i > 0) out += ",";
    out += signs[i] > 0 ? "+" : "-";
  }
  return out + ")";
}

std::vector<GeneralizedCircle> SolutionSet::objects() const {
  std::vector<GeneralizedCircle> out;
  out.reserve(solutions.size());
  for (const auto& s : solutions) out.push_back(s.object);
  return out;
}

namespace {

// Circle roots this many eps in radius that sit on a common point are merged
// into it.
constexpr double kPointMergeFactor = 100.0;

// Similarity p -> (p - origin) / scale used to bring a configuration to unit
// size before elimination.
struct Frame {
  Vec2 origin;
  double scale = 1.0;

  GeneralizedCircle to_local(const GeneralizedCircle& obj) const {
    switch (obj.kind()) {
      case ObjectKind::kCircle: {
        const Circle& c = obj.as_circle();
        return Circle{(c.center - origin) / scale, c.radius / scale};
      }
      case ObjectKind::kLine: {
        const Line& l = obj.as_line();
        return Line{l.normal, (l.offset - dot(l.normal, origin)) / scale};
      }
      case ObjectKind::kPoint:
        return FinitePoint{(obj.as_point().at - origin) / scale};
      case ObjectKind::kInfinity:
        break;
    }
    return obj;
  }
};

Frame frame_for(std::span<const SignedInput> inputs) {
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
  for (const auto& in : inputs) {
    const auto& obj = in.object;
    if (obj.is_circle()) grow(obj.as_circle().center, obj.as_circle().radius);
    if (obj.is_line()) grow(obj.as_line().foot(), 0.0);
    if (obj.is_point()) grow(obj.as_point().at, 0.0);
  }
  Frame f;
  if (!(hi_x >= lo_x)) return f;
  f.origin = Vec2{(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
  const double diameter = std::hypot(hi_x - lo_x, hi_y - lo_y);
  if (diameter > 0.0) f.scale = diameter;
  return f;
}

// Geometric residual of a signed constraint at the root (center, r).
double signed_residual(const SignedInput& in, Vec2 center, double r) {
  const auto& obj = in.object;
  switch (obj.kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = obj.as_circle();
      return std::abs(distance(center, c.center) -
                      std::abs(r + in.sign * c.radius));
    }
    case ObjectKind::kLine:
      return std::abs(obj.as_line().signed_distance(center) - in.sign * r);
    case ObjectKind::kPoint:
      return std::abs(distance(center, obj.as_point().at) - std::abs(r));
    case ObjectKind::kInfinity:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

// Rounding splits a double root into two nearby real roots. Two roots are
// one solution when their midpoint satisfies every constraint.
void merge_split_roots(std::span<const SignedInput> inputs,
                       std::vector<SignedSolution>* roots,
                       const Tolerance& tol) {
  auto& out = *roots;
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      const Vec2 center = (out[a].center + out[b].center) * 0.5;
      const double r = 0.5 * (out[a].signed_radius + out[b].signed_radius);
      const GeneralizedCircle probe = Circle{center, std::abs(r)};
      const double eps = tol.widened_for(probe).eps();
      const bool root =
          std::all_of(inputs.begin(), inputs.end(), [&](const SignedInput& in) {
            return signed_residual(in, center, r) <= eps;
          });
      if (!root) continue;
      out[a].center = center;
      out[a].signed_radius = r;
      out[a].object =
          std::abs(r) <= eps ? GeneralizedCircle(FinitePoint{center}) : probe;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(b));
      --b;
    }
  }
}

int sign_of_kind(TangencyKind kind) {
  return kind == TangencyKind::kInternalCircle ? -1 : 1;
}

bool all_lines(std::span<const GeneralizedCircle> objects) {
  return std::all_of(objects.begin(), objects.end(),
                     [](const auto& o) { return o.is_line(); });
}

}  // namespace

DegeneracyReport is_degenerate(std::span<const GeneralizedCircle> objects,
                               const Tolerance& tol) {
  DegeneracyReport report;
  const std::size_t n = objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_tangent(tangency(objects[i], objects[j], tol))) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!is_tangent(tangency(objects[i], objects[k], tol)) ||
            !is_tangent(tangency(objects[j], objects[k], tol))) {
          continue;
        }
        const auto common =
            common_point_of_three(objects[i], objects[j], objects[k], tol);
        if (common.empty()) continue;
        report.degenerate = true;
        report.witness = common.front();
        report.triple = {i, j, k};
        return report;
      }
    }
  }
  return report;
}

std::vector<SignedSolution> solve_signed(
    std::span<const SignedInput> raw_inputs, const Tolerance& tol) {
  std::vector<SignedInput> inputs(raw_inputs.begin(), raw_inputs.end());
  for (auto& in : inputs) {
    if (!in.object.is_infinity()) in.object = normalize(in.object, tol);
  }
  const std::size_t n = inputs.size();
  if (n < 3) {
    throw GeometryError(ErrorCode::kTooFewObjects,
                        "solve_signed needs three constraints");
  }
  for (const auto& in : inputs) {
    if (in.object.is_infinity()) {
      throw GeometryError(ErrorCode::kInvalidParams,
                          "infinity has no tangency equation");
    }
  }
  const Frame frame = frame_for(inputs);
  std::vector<elimination::TangencyEquation> eqs;
  eqs.reserve(n);
  for (const auto& in : inputs) {
    eqs.push_back(
        elimination::equation_for(frame.to_local(in.object), in.sign));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::array<elimination::TangencyEquation, 3> triple{
            eqs[i], eqs[j], eqs[k]};
        const elimination::Roots roots = elimination::eliminate(triple);
        if (roots.infinite) continue;
        std::vector<SignedSolution> out;
        for (auto root : roots.xyr) {
          root = elimination::polish(triple, root);
          const Vec2 center =
              frame.origin + Vec2{root[0], root[1]} * frame.scale;
          const double r = root[2] * frame.scale;
          GeneralizedCircle probe = Circle{center, std::abs(r)};
          const double eps = tol.widened_for(probe).eps();
          bool ok = true;
          for (std::size_t m = 0; m < n && ok; ++m) {
            if (m == i || m == j || m == k) continue;
            ok = signed_residual(inputs[m], center, r) <= eps;
          }
          if (!ok) continue;
          SignedSolution s;
          s.center = center;
          s.signed_radius = r;
          s.object = std::abs(r) <= eps ? GeneralizedCircle(FinitePoint{center})
                                        : probe;
          out.push_back(s);
        }
        merge_split_roots(inputs, &out, tol);
        return out;
      }
    }
  }
  throw GeometryError(ErrorCode::kDegenerateInput,
                      "every constraint triple has a continuum of roots");
}

TangentLines tangent_lines(std::span<const GeneralizedCircle> objects,
                           const Tolerance& tol) {
  TangentLines out;
  std::vector<GeneralizedCircle> finite;
  std::vector<Line> input_lines;
  for (const auto& o : objects) {
    if (o.is_infinity()) continue;  // every line passes through infinity
    if (o.is_line()) input_lines.push_back(o.as_line());
    finite.push_back(o);
  }

  auto center_of = [](const GeneralizedCircle& o) {
    return o.is_circle() ? o.as_circle().center : o.as_point().at;
  };
  auto radius_of = [](const GeneralizedCircle& o) {
    return o.is_circle() ? o.as_circle().radius : 0.0;
  };

  std::vector<Line> candidates;
  std::vector<GeneralizedCircle> round;  // circles and points
  for (const auto& o : finite) {
    if (!o.is_line()) round.push_back(o);
  }

  if (!input_lines.empty()) {
    const Line& first = input_lines.front();
    for (const Line& l : input_lines) {
      if (std::abs(cross(first.normal, l.normal)) > tol.length_eps) return out;
    }
    if (round.empty()) {
      out.infinite = true;
      return out;
    }
    const Vec2 c = center_of(round.front());
    const double r = radius_of(round.front());
    candidates.push_back(Line{first.normal, dot(first.normal, c) + r});
    if (r > 0.0) {
      candidates.push_back(Line{first.normal, dot(first.normal, c) - r});
    }
  } else {
    if (round.size() < 2) {
      out.infinite = true;
      return out;
    }
    // Use the pair with the widest center spacing for the angle equation.
    std::size_t bi = 0;
    std::size_t bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < round.size(); ++i) {
      for (std::size_t j = i + 1; j < round.size(); ++j) {
        const double d = distance(center_of(round[i]), center_of(round[j]));
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    const Vec2 ci = center_of(round[bi]);
    const Vec2 cj = center_of(round[bj]);
    const double ri = radius_of(round[bi]);
    const double rj = radius_of(round[bj]);
    const Vec2 delta = ci - cj;
    const double len = delta.norm();
    if (len <= tol.eps()) return out;  // concentric: no common tangent
    const double phi = std::atan2(delta.y, delta.x);
    for (int si : {1, -1}) {
      for (int sj : {1, -1}) {
        // dot(n, ci) - d = si ri and dot(n, cj) - d = sj rj.
        const double k = si * ri - sj * rj;
        double ratio = k / len;
        if (std::abs(ratio) > 1.0) {
          if (std::abs(k) - len > tol.eps()) continue;
          ratio = std::copysign(1.0, ratio);
        }
        const double spread = std::acos(ratio);
        for (double theta : {phi + spread, phi - spread}) {
          const Vec2 nrm{std::cos(theta), std::sin(theta)};
          candidates.push_back(Line{nrm, dot(nrm, ci) - si * ri});
        }
      }
    }
  }

  for (const Line& raw : candidates) {
    const GeneralizedCircle cand = normalize(GeneralizedCircle(raw), tol);
    bool ok = true;
    for (const auto& o : finite) {
      if (approx_equal(cand, o, 10.0 * tol.eps())) {
        ok = false;
        break;
      }
      const TangencyKind kind = tangency(cand, o, tol);
      if (!is_tangent(kind)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const bool seen =
        std::any_of(out.lines.begin(), out.lines.end(), [&](const Line& l) {
          return approx_equal(GeneralizedCircle(l), cand, 10.0 * tol.eps());
        });
    if (!seen) out.lines.push_back(cand.as_line());
  }
  return out;
}

std::vector<GeneralizedCircle> point_solutions(
    std::span<const GeneralizedCircle> objects, const Tolerance& tol) {
  std::vector<GeneralizedCircle> out;
  if (objects.size() < 2) return out;
  const bool has_infinity =
      std::any_of(objects.begin(), objects.end(),
                  [](const auto& o) { return o.is_infinity(); });
  if (!has_infinity) {
    for (const auto& p : intersection_points(objects[0], objects[1], tol)) {
      if (!p.is_point()) continue;
      const bool on_all =
          std::all_of(objects.begin() + 2, objects.end(),
                      [&](const auto& o) { return lies_on(p, o, tol); });
      if (on_all) out.push_back(p);
    }
  }
  if (all_lines(objects)) out.push_back(PointAtInfinity{});
  return out;
}

SignCombination solution_signs(const GeneralizedCircle& solution,
                               std::span<const GeneralizedCircle> inputs,
                               const Tolerance& tol) {
  if (!solution.is_circle() && !solution.is_point()) {
    throw GeometryError(ErrorCode::kNotASolution,
                        "signs exist only for circle and point solutions");
  }
  SignCombination out;
  const Tolerance wide = tol.widened_for(solution);
  for (const auto& in : inputs) {
    const TangencyKind kind = tangency(solution, in, wide);
    if (!is_tangent(kind)) {
      throw GeometryError(ErrorCode::kNotASolution,
                          "object is not tangent to " + in.debug_string());
    }
    if (solution.is_point()) {
      out.signs.push_back(1);
    } else if (in.is_line()) {
      out.signs.push_back(
          in.as_line().signed_distance(solution.as_circle().center) >= 0.0
              ? 1
              : -1);
    } else {
      out.signs.push_back(sign_of_kind(kind));
    }
  }
  return out;
}

bool canonical_less(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
  }
  switch (a.kind()) {
    case ObjectKind::kCircle: {
      const Circle& p = a.as_circle();
      const Circle& q = b.as_circle();
      return std::tie(p.center.x, p.center.y, p.radius) <
             std::tie(q.center.x, q.center.y, q.radius);
    }
    case ObjectKind::kLine: {
      const Line& p = a.as_line();
      const Line& q = b.as_line();
      return std::tie(p.normal.x, p.normal.y, p.offset) <
             std::tie(q.normal.x, q.normal.y, q.offset);
    }
    case ObjectKind::kPoint:
      return std::tie(a.as_point().at.x, a.as_point().at.y) <
             std::tie(b.as_point().at.x, b.as_point().at.y);
    case ObjectKind::kInfinity:
      return false;
  }
  return false;
}

SolutionSet solve(std::span<const GeneralizedCircle> raw_objects,
                  const Tolerance& tol) {
  std::vector<GeneralizedCircle> normalized;
  normalized.reserve(raw_objects.size());
  for (const auto& o : raw_objects) normalized.push_back(normalize(o, tol));
  const std::span<const GeneralizedCircle> objects(normalized);
  if (objects.size() < 3) {
    throw GeometryError(ErrorCode::kTooFewObjects,
                        "at least three objects are required");
  }
  const std::size_t n = objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (approx_equal(objects[i], objects[j], tol.eps())) {
        throw GeometryError(ErrorCode::kDegenerateInput,
                            "duplicate input " + objects[i].debug_string());
      }
    }
  }

  SolutionSet result;
  const DegeneracyReport deg = is_degenerate(objects, tol);
  if (deg.degenerate) {
    bool all_through = true;
    for (std::size_t i = 0; i < n && all_through; ++i) {
      all_through = objects[i].is_any_point()
                        ? approx_equal(objects[i], *deg.witness, tol.eps())
                        : lies_on(*deg.witness, objects[i], tol);
      for (std::size_t j = i + 1; j < n && all_through; ++j) {
        all_through = is_tangent(tangency(objects[i], objects[j], tol));
      }
    }
    if (!all_through) {
      throw GeometryError(ErrorCode::kDegenerateInput,
                          "three objects touch at one point");
    }
    result.infinite = true;
    result.witness = deg.witness;
    return result;
  }

  std::vector<GeneralizedCircle> candidates;
  const bool has_infinity =
      std::any_of(objects.begin(), objects.end(),
                  [](const auto& o) { return o.is_infinity(); });

  if (!has_infinity) {
    std::vector<std::size_t> signed_idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (!objects[i].is_point()) signed_idx.push_back(i);
    }
    const std::size_t free_bits =
        signed_idx.empty() ? 0 : signed_idx.size() - 1;
    std::vector<SignedInput> inputs(n);
    for (std::size_t i = 0; i < n; ++i) inputs[i].object = objects[i];
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
      for (std::size_t b = 0; b < signed_idx.size(); ++b) {
        inputs[signed_idx[b]].sign =
            (b > 0 && ((mask >> (b - 1)) & 1U)) ? -1 : 1;
      }
      for (const auto& s : solve_signed(inputs, tol)) {
        candidates.push_back(s.object);
      }
    }
  }

  const TangentLines lines = tangent_lines(objects, tol);
  if (lines.infinite) {
    throw GeometryError(ErrorCode::kDegenerateInput,
                        "a continuum of tangent lines");
  }
  for (const Line& l : lines.lines) candidates.push_back(l);
  const auto points = point_solutions(objects, tol);
  for (const auto& p : points) candidates.push_back(p);

  for (const auto& cand : candidates) {
    const Tolerance wide = tol.widened_for(cand);
    const double cluster = 10.0 * wide.eps();
    // A common point that is a multiple root splits under rounding into tiny
    // circles around it (radius ~ sqrt of the perturbation); they are the
    // point itself.
    if (cand.is_circle() &&
        cand.as_circle().radius <= kPointMergeFactor * wide.eps()) {
      const Circle& c = cand.as_circle();
      const bool on_point =
          std::any_of(points.begin(), points.end(), [&](const auto& p) {
            return p.is_point() &&
                   distance(p.as_point().at, c.center) <=
                       c.radius + kPointMergeFactor * wide.eps();
          });
      if (on_point) continue;
    }
    const bool is_input = std::any_of(
        objects.begin(), objects.end(),
        [&](const auto& o) { return approx_equal(cand, o, cluster); });
    if (is_input) continue;
    const bool seen =
        std::any_of(result.solutions.begin(), result.solutions.end(),
                    [&](const Solution& s) {
                      return approx_equal(s.object, cand, cluster);
                    });
    if (seen) continue;
    Solution sol;
    sol.object = cand;
    bool ok = true;
    for (const auto& o : objects) {
      const TangencyKind kind = tangency(cand, o, wide);
      if (!is_tangent(kind)) {
        ok = false;
        break;
      }
      sol.kinds.push_back(kind);
    }
    if (!ok) continue;
    if (cand.is_circle() || cand.is_point()) {
      sol.signs = solution_signs(cand, objects, tol);
    }
    result.solutions.push_back(std::move(sol));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const Solution& a, const Solution& b) {
              return canonical_less(a.object, b.object);
            });
  return result;
}

}  // namespace apollonius
