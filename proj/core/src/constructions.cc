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

#include "apollonius/constructions.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "apollonius/error.h"
#include "apollonius/solver.h"

namespace apollonius {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

GeneralizedCircle x_axis() { return GeneralizedCircle::line({0.0, 1.0}, 0.0); }
GeneralizedCircle y_axis() { return GeneralizedCircle::line({1.0, 0.0}, 0.0); }

int solution_count(const std::vector<GeneralizedCircle>& inputs) {
  return static_cast<int>(solve(inputs, Tolerance::for_objects(inputs)).size());
}

// Circles of an annulus (1, outer) touching the inner circle internally, at
// `count` evenly spaced angles starting from 0.
std::vector<GeneralizedCircle> type_b_ring(double outer, int count) {
  const double b = (outer + 1.0) / 2.0;
  const double d = (outer - 1.0) / 2.0;
  std::vector<GeneralizedCircle> out;
  for (int k = 0; k < count; ++k) {
    const double t = 2.0 * std::numbers::pi * k / count;
    out.push_back(
        GeneralizedCircle::circle(d * std::cos(t), d * std::sin(t), b));
  }
  return out;
}

void record_within_part_tangencies(Scenario& s) {
  const auto tol = Tolerance::for_objects(s.inputs);
  const int split = s.parts->first;
  const int n = static_cast<int>(s.inputs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((i < split) != (j < split)) continue;
      if (is_tangent(tangency(s.inputs[i], s.inputs[j], tol))) {
        s.extra_tangencies.emplace_back(i, j);
      }
    }
  }
}

Scenario bipartite(const std::string& name, std::vector<GeneralizedCircle> big,
                   std::vector<GeneralizedCircle> small,
                   const std::string& provenance) {
  Scenario s;
  s.name = name;
  s.provenance = provenance;
  s.parts = std::make_pair(static_cast<int>(big.size()),
                           static_cast<int>(small.size()));
  s.inputs = std::move(big);
  s.inputs.insert(s.inputs.end(), small.begin(), small.end());
  record_within_part_tangencies(s);
  return s;
}

// First `count` members of `pool` such that the union with `base` is
// non-degenerate. Greedy in canonical order.
std::vector<GeneralizedCircle> pick_non_degenerate(
    const std::vector<GeneralizedCircle>& pool,
    const std::vector<GeneralizedCircle>& base, int count) {
  std::vector<GeneralizedCircle> chosen;
  for (const auto& candidate : pool) {
    if (static_cast<int>(chosen.size()) == count) break;
    std::vector<GeneralizedCircle> trial = base;
    trial.insert(trial.end(), chosen.begin(), chosen.end());
    trial.push_back(candidate);
    if (!is_degenerate(trial, Tolerance::for_objects(trial)).degenerate) {
      chosen.push_back(candidate);
    }
  }
  return chosen;
}

}  // namespace

Scenario construction_1(double a1, double a2) {
  if (!(std::isfinite(a1) && std::isfinite(a2) && a1 > 0.0 && a2 > a1)) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "construction_1 needs 0 < a1 < a2");
  }
  // At a2 / a1 = 3 + 2 sqrt2 the circle centered at O touches all four
  // inputs; below it the second pair of circle solutions does not exist.
  if (!(a2 / a1 > kConstruction1MinRatio * (1.0 + 1e-9))) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "construction_1 needs a2 / a1 > 3 + 2 sqrt2");
  }
  Scenario s;
  s.name = "c1";
  s.inputs = {GeneralizedCircle::circle(a1, a1, a1),
              GeneralizedCircle::circle(-a1, -a1, a1),
              GeneralizedCircle::circle(a2, a2, a2),
              GeneralizedCircle::circle(-a2, -a2, a2)};
  s.expected_solution_count = 6;
  s.expected_solutions = {x_axis(), y_axis()};
  s.provenance =
      "two circles inscribed in one quadrant of the axes and their "
      "reflections through O";
  return s;
}

Scenario construction_2(double a, double branch) {
  if (!(std::isfinite(a) && std::isfinite(branch) && a > 0.0)) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "construction_2 needs a > 0 and a finite branch");
  }
  const Vec2 u{1.0 / kSqrt2, 1.0 / kSqrt2};
  const Vec2 v{-1.0 / kSqrt2, 1.0 / kSqrt2};
  const Vec2 omega_prime{-a, -a};
  // Centers with |c - omega| - |c - omega'| = 2a lie on a hyperbola with
  // foci at the two omega centers and both semi-axes equal to a.
  const Vec2 c = -a * std::cosh(branch) * u + a * std::sinh(branch) * v;
  const double rho = distance(c, omega_prime) + a;

  Scenario s;
  s.name = "c2";
  s.inputs = {y_axis(), x_axis(), GeneralizedCircle::circle(c, rho),
              GeneralizedCircle::circle(-c.y, -c.x, rho)};
  const auto tol = Tolerance::for_objects(s.inputs);
  if (!(c.norm() < rho - tol.eps())) {
    throw GeometryError(ErrorCode::kNoFeasibleGamma,
                        "gamma1 does not enclose the axes' common point");
  }
  s.expected_solution_count = 6;
  s.expected_solutions = {GeneralizedCircle::circle(a, a, a),
                          GeneralizedCircle::circle(-a, -a, a)};
  if (solution_count(s.inputs) != 6) {
    throw GeometryError(ErrorCode::kNoFeasibleGamma,
                        "gamma pair does not yield six solutions");
  }
  s.provenance =
      "axes with two mirror circles touching a quadrant circle and its "
      "reflection through O";
  return s;
}

Scenario construction_3() {
  const double x = 2.0 / std::sqrt(5.0);
  const double r = 0.4;
  Scenario s;
  s.name = "c3";
  s.inputs = {GeneralizedCircle::line({0.0, 1.0}, 1.0),
              GeneralizedCircle::circle(-x, 1.0, 1.0),
              GeneralizedCircle::circle(0.0, 1.0, 1.0),
              GeneralizedCircle::circle(x, 1.0, 1.0)};
  s.expected_solution_count = 6;
  s.expected_solutions = {GeneralizedCircle::line({0.0, 1.0}, 0.0),
                          GeneralizedCircle::line({0.0, 1.0}, 2.0)};
  for (double sx : {-x / 2.0, x / 2.0}) {
    for (double sy : {1.0 - r, 1.0 + r}) {
      s.expected_solutions.push_back(GeneralizedCircle::circle(sx, sy, r));
    }
  }
  s.provenance = "mid line of a strip with three unit circles centered on it";
  return s;
}

Scenario construction_4() {
  const double big = 3.0 + 2.0 * kSqrt2;
  // Equal circles on the diagonals: radius sqrt(R/3), center distance twice
  // the radius. The power of O with respect to each is R.
  const double rho = std::sqrt(big / 3.0);
  const double t = 2.0 * rho / kSqrt2;
  Scenario s;
  s.name = "c4";
  s.inputs = {GeneralizedCircle::circle(0.0, 0.0, 1.0),
              GeneralizedCircle::circle(0.0, 0.0, big),
              GeneralizedCircle::circle(t, t, rho),
              GeneralizedCircle::circle(-t, t, rho)};
  s.expected_solution_count = 6;
  s.expected_solutions = type_b_ring(big, 4);
  s.provenance =
      "concentric pair with radius ratio 3 + 2 sqrt2 and two equal circles "
      "on perpendicular diagonals";
  return s;
}

Scenario example_square(int variant) {
  if (variant != 1 && variant != 2) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "square variant must be 1 or 2");
  }
  const double ratio = variant == 1 ? kSquare1Ratio : kSquare2Ratio;
  const double h = 1.0 / ratio;
  Scenario s;
  s.name = variant == 1 ? "square1" : "square2";
  s.inputs = {GeneralizedCircle::circle(h, h, 1.0),
              GeneralizedCircle::circle(-h, h, 1.0),
              GeneralizedCircle::circle(-h, -h, 1.0),
              GeneralizedCircle::circle(h, -h, 1.0)};
  s.expected_solution_count = 6;
  s.provenance = "equal circles centered at the vertices of a square";
  return s;
}

Scenario five_circle_example() {
  const Scenario square = example_square(1);
  const auto sols =
      solve(square.inputs, Tolerance::for_objects(square.inputs)).objects();
  Scenario s;
  s.name = "five";
  s.inputs.assign(sols.begin(),
                  sols.begin() + std::min<std::size_t>(5, sols.size()));
  s.expected_solution_count = 4;
  s.expected_solutions = square.inputs;
  s.provenance = "five of the six solutions of the first square example";
  return s;
}

std::string to_string(BoundCitation c) {
  switch (c) {
    case BoundCitation::kTripleBound:
      return "triple bound: at most 8 generalized circles touch 3 objects";
    case BoundCitation::kQuadrupleBound:
      return "four-object bound: at most 6 generalized circles touch 4 "
             "non-degenerate objects";
    case BoundCitation::kQuintupleBound:
      return "five-object bound: at most 4 generalized circles touch 5 "
             "non-degenerate objects";
  }
  return "unknown";
}

bool kmn_realizable(int m, int n) {
  const int lo = std::min(m, n);
  const int hi = std::max(m, n);
  if (lo <= 2) return true;
  if (lo == 3) return hi <= 8;
  if (lo == 4) return hi <= 6;
  return false;
}

std::variant<Scenario, Unrealizable> kmn_witness(int m, int n) {
  if (m < 0 || n < 0) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "graph sides must be non-negative");
  }
  const int hi = std::max(m, n);
  const int lo = std::min(m, n);
  std::ostringstream name;
  name << "kmn-" << hi << "-" << lo;

  if (!kmn_realizable(hi, lo)) {
    Unrealizable u;
    u.citation = lo == 3   ? BoundCitation::kTripleBound
                 : lo == 4 ? BoundCitation::kQuadrupleBound
                           : BoundCitation::kQuintupleBound;
    std::ostringstream why;
    why << name.str() << " needs " << hi << " circles touching " << lo
        << " non-degenerate objects; " << to_string(u.citation);
    u.reason = why.str();
    return u;
  }

  if (lo <= 2) {
    const double outer = 3.0;
    std::vector<GeneralizedCircle> small = {
        GeneralizedCircle::circle(0.0, 0.0, 1.0),
        GeneralizedCircle::circle(0.0, 0.0, outer)};
    small.resize(lo);
    return bipartite(name.str(), type_b_ring(outer, hi), small,
                     "concentric pair with circles touching both");
  }

  std::vector<GeneralizedCircle> small;
  std::string provenance;
  if (lo == 3) {
    small = {GeneralizedCircle::circle(0.0, 0.0, 1.0),
             GeneralizedCircle::circle(5.0, 0.0, 1.0),
             GeneralizedCircle::circle(1.7, 3.3, 1.0)};
    provenance = "three separated unit circles and their common tangents";
  } else {
    small = construction_1().inputs;
    provenance = "quadrant construction and its tangent set";
  }
  const auto pool = solve(small, Tolerance::for_objects(small)).objects();
  auto big = pick_non_degenerate(pool, small, hi);
  if (static_cast<int>(big.size()) < hi) {
    throw GeometryError(ErrorCode::kDegenerateInput,
                        "no non-degenerate witness subset for " + name.str());
  }
  return bipartite(name.str(), std::move(big), std::move(small), provenance);
}

std::vector<std::string> registry_names() {
  return {"square1", "square2", "five", "c1", "c2", "c3", "c4"};
}

std::variant<Scenario, Unrealizable> scenario_by_name(const std::string& name) {
  if (name == "square1") return example_square(1);
  if (name == "square2") return example_square(2);
  if (name == "five") return five_circle_example();
  if (name == "c1") return construction_1();
  if (name == "c2") return construction_2();
  if (name == "c3") return construction_3();
  if (name == "c4") return construction_4();
  int m = -1;
  int n = -1;
  char tail = 0;
  if (name.rfind("kmn-", 0) == 0 &&
      std::sscanf(name.c_str() + 4, "%d-%d%c", &m, &n, &tail) == 2 && m >= 0 &&
      n >= 0 && m <= 64 && n <= 64) {
    return kmn_witness(m, n);
  }
  throw GeometryError(ErrorCode::kUnknownScenario, name);
}

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> problems;
  const auto tol = Tolerance::for_objects(s.inputs);
  const std::size_t n = s.inputs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (approx_equal(s.inputs[i], s.inputs[j], 10.0 * tol.eps())) {
        std::ostringstream msg;
        msg << "inputs " << i << " and " << j << " coincide";
        problems.push_back(msg.str());
      }
    }
  }
  if (!problems.empty()) return problems;
  if (n >= 3 && is_degenerate(s.inputs, tol).degenerate) {
    problems.push_back("inputs are degenerate");
    return problems;
  }
  if (s.expected_solution_count) {
    const SolutionSet set = solve(s.inputs, tol);
    if (set.infinite ||
        static_cast<int>(set.size()) != *s.expected_solution_count) {
      std::ostringstream msg;
      msg << "solver found " << (set.infinite ? -1 : int(set.size()))
          << " solutions, expected " << *s.expected_solution_count;
      problems.push_back(msg.str());
    }
    for (const auto& e : s.expected_solutions) {
      const bool found = std::any_of(
          set.solutions.begin(), set.solutions.end(), [&](const Solution& x) {
            return approx_equal(x.object, e, 1e3 * tol.eps());
          });
      if (!found) {
        problems.push_back("expected solution missing: " + e.debug_string());
      }
    }
  }
  for (const auto& e : s.expected_solutions) {
    const auto etol = tol.widened_for(e);
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_tangent(tangency(e, s.inputs[i], etol))) {
        problems.push_back("expected solution " + e.debug_string() +
                           " misses input " + std::to_string(i));
      }
    }
  }
  if (s.parts) {
    const std::size_t split = s.parts->first;
    for (std::size_t i = 0; i < split; ++i) {
      for (std::size_t j = split; j < n; ++j) {
        if (!is_tangent(tangency(s.inputs[i], s.inputs[j], tol))) {
          std::ostringstream msg;
          msg << "cross pair " << i << "-" << j << " is not tangent";
          problems.push_back(msg.str());
        }
      }
    }
  }
  return problems;
}

}  // namespace apollonius
