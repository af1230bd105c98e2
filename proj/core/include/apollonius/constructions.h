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

// Named extremal configurations and complete-bipartite tangency witnesses.

#ifndef APOLLONIUS_CONSTRUCTIONS_H_
#define APOLLONIUS_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apollonius/geometry.h"

namespace apollonius {

struct Scenario {
  std::string name;
  std::vector<GeneralizedCircle> inputs;
  // Absent for tangency-graph witnesses, whose full solution count is not a
  // property of the construction.
  std::optional<int> expected_solution_count;
  // Known members of the solution set (may be a subset).
  std::vector<GeneralizedCircle> expected_solutions;
  std::string provenance;
  // Tangency-graph witnesses: inputs [0, part_a) form one side.
  std::optional<std::pair<int, int>> parts;
  // Tangent pairs inside one side of a witness (allowed, only recorded).
  std::vector<std::pair<int, int>> extra_tangencies;
};

// Radius-to-half-side ratios of the two equal-circle square examples. Found
// with tools/sweep_square_radius; each sits inside a 6-solution interval.
inline constexpr double kSquare1Ratio = 0.5;
inline constexpr double kSquare2Ratio = 2.0;

// Free position of the first gamma circle along its hyperbola branch.
inline constexpr double kConstruction2DefaultBranch = 0.5;

// Below this a2 / a1 ratio construction_1 has only four solutions.
inline constexpr double kConstruction1MinRatio = 3.0 + 2.0 * 1.4142135623730951;

// Circles (a1, a1, a1) and (a2, a2, a2) in the first quadrant of the axes
// plus their reflections through O. Requires 0 < a1 and
// a2 / a1 > kConstruction1MinRatio.
Scenario construction_1(double a1 = 1.0, double a2 = 7.0);

// The axes plus two mirror circles gamma1, gamma2 (mirror line y = -x).
// gamma1 touches omega = (a, a, a) externally and omega' = (-a, -a, a)
// internally; `branch` moves its center along the hyperbola of such centers.
// Throws kNoFeasibleGamma when gamma1 does not enclose O.
Scenario construction_2(double a = 1.0,
                        double branch = kConstruction2DefaultBranch);

// Line y = 1 with unit circles centered at x = -2/sqrt5, 0, 2/sqrt5 on it.
Scenario construction_3();

// Concentric omega (r = 1) and Omega (R = 3 + 2 sqrt2) with two equal circles
// on perpendicular diagonals touching every type-B circle at 0, 90, 180 and
// 270 degrees.
Scenario construction_4();

// Four unit circles at the vertices of a square (variant 1 or 2).
Scenario example_square(int variant);

// Five of the six solutions of example_square(1).
Scenario five_circle_example();

enum class BoundCitation {
  kTripleBound,     // at most 8 solutions for 3 objects
  kQuadrupleBound,  // at most 6 solutions for 4 objects
  kQuintupleBound,  // at most 4 solutions for 5 objects
};

std::string to_string(BoundCitation c);

struct Unrealizable {
  BoundCitation citation;
  std::string reason;
};

// True iff the complete bipartite tangency graph K(m, n) is realizable by a
// non-degenerate set of circles.
bool kmn_realizable(int m, int n);

// Witness configuration for a realizable K(m, n): inputs [0, max) form the
// larger side. Unrealizable cells carry the count bound that rules them out.
std::variant<Scenario, Unrealizable> kmn_witness(int m, int n);

// Registry lookup: square1, square2, five, c1, c2, c3, c4, kmn-M-N. Throws
// kUnknownScenario for other names.
std::variant<Scenario, Unrealizable> scenario_by_name(const std::string& name);

// Names of the fixed registry entries (without the kmn family).
std::vector<std::string> registry_names();

// Problems found when re-checking a scenario: pairwise distinct inputs,
// non-degeneracy, solver count, expected solutions, cross-part tangency.
// Empty when the scenario is sound.
std::vector<std::string> validate_scenario(const Scenario& s);

}  // namespace apollonius

#endif  // APOLLONIUS_CONSTRUCTIONS_H_
