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

// Generalized Apollonius solver: every generalized circle tangent to three or
// more given generalized circles.

#ifndef APOLLONIUS_SOLVER_H_
#define APOLLONIUS_SOLVER_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apollonius/geometry.h"

namespace apollonius {

// One tangency sign per given object: +1 external, -1 internal. For line
// inputs the sign is the side of the line holding the solution's center.
// A combination and its negation describe the same class of solutions.
struct SignCombination {
  std::vector<int> signs;

  SignCombination negated() const;
  // Representative of the class: first sign is +1.
  SignCombination canonical() const;
  bool same_class(const SignCombination& other) const;
  std::string to_string() const;

  bool operator==(const SignCombination&) const = default;
};

// A constraint with a chosen sign. Circles use (x - xi)^2 + (y - yi)^2 =
// (r + sign * ri)^2, lines dot(n, p) - offset = sign * r, points ignore the
// sign.
struct SignedInput {
  GeneralizedCircle object;
  int sign = 1;
};

// Root of the signed system. A negative signed_radius means the circle
// satisfies the opposite combination.
struct SignedSolution {
  GeneralizedCircle object;  // Circle or FinitePoint
  Vec2 center;
  double signed_radius = 0.0;
};

struct Solution {
  GeneralizedCircle object;
  std::vector<TangencyKind> kinds;       // one per input
  std::optional<SignCombination> signs;  // circles and points only
};

struct SolutionSet {
  std::vector<Solution> solutions;
  // Every input touches at one point; the solutions form a continuous family
  // through `witness`.
  bool infinite = false;
  std::optional<GeneralizedCircle> witness;

  std::size_t size() const { return solutions.size(); }
  std::vector<GeneralizedCircle> objects() const;
};

struct DegeneracyReport {
  bool degenerate = false;
  std::optional<GeneralizedCircle> witness;
  std::array<std::size_t, 3> triple{};
};

// True iff some three objects are pairwise tangent at one common point.
DegeneracyReport is_degenerate(std::span<const GeneralizedCircle> objects,
                               const Tolerance& tol);

// Circle/point solutions for one sign combination (at most two for a
// non-degenerate configuration). With more than three inputs the system is
// solved on the first usable triple and the roots are filtered against the
// remaining signed constraints. Throws kDegenerateInput when every triple is
// degenerate.
std::vector<SignedSolution> solve_signed(std::span<const SignedInput> inputs,
                                         const Tolerance& tol);

struct TangentLines {
  std::vector<Line> lines;
  bool infinite = false;
};

// Lines tangent to every object. Input lines are excluded from the result.
TangentLines tangent_lines(std::span<const GeneralizedCircle> objects,
                           const Tolerance& tol);

// Points (finite or infinity) lying on every object.
std::vector<GeneralizedCircle> point_solutions(
    std::span<const GeneralizedCircle> objects, const Tolerance& tol);

// Complete deduplicated solution set of 3..n pairwise distinct objects.
// Throws kTooFewObjects for fewer than three objects and kDegenerateInput for
// duplicated inputs or a numerically singular configuration.
SolutionSet solve(std::span<const GeneralizedCircle> objects,
                  const Tolerance& tol);

// Sign combination realized by a circle or point solution.
SignCombination solution_signs(const GeneralizedCircle& solution,
                               std::span<const GeneralizedCircle> inputs,
                               const Tolerance& tol);

// Ordering used for solution sets: by kind, then center/normal, then radius.
bool canonical_less(const GeneralizedCircle& a, const GeneralizedCircle& b);

}  // namespace apollonius

#endif  // APOLLONIUS_SOLVER_H_
