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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "apollonius/elimination.h"

namespace apollonius {
namespace {

using GC = GeneralizedCircle;

const double kSqrt3 = std::sqrt(3.0);

// Descartes: k4 = k1 + k2 + k3 +/- 2 sqrt(k1 k2 + k2 k3 + k3 k1).
std::pair<double, double> descartes(double k1, double k2, double k3) {
  const double s = k1 + k2 + k3;
  const double q = 2.0 * std::sqrt(k1 * k2 + k2 * k3 + k3 * k1);
  return {s + q, s - q};
}

std::vector<GC> soddy_inputs() {
  return {GC::circle(0, 0, 1), GC::circle(2, 0, 1), GC::circle(1, kSqrt3, 1)};
}

SolutionSet solve_all(const std::vector<GC>& objects) {
  return solve(objects, Tolerance::for_objects(objects));
}

int count_kind(const SolutionSet& set, ObjectKind kind) {
  return static_cast<int>(std::count_if(
      set.solutions.begin(), set.solutions.end(),
      [&](const Solution& s) { return s.object.kind() == kind; }));
}

TEST(SolverTest, SoddyPairMatchesDescartes) {
  const auto set = solve_all(soddy_inputs());
  ASSERT_EQ(set.size(), 2u);
  ASSERT_FALSE(set.infinite);
  const auto [k_inner, k_outer] = descartes(1, 1, 1);
  std::vector<double> radii;
  for (const auto& s : set.solutions) {
    ASSERT_TRUE(s.object.is_circle());
    EXPECT_NEAR(s.object.as_circle().center.x, 1.0, 1e-12);
    EXPECT_NEAR(s.object.as_circle().center.y, 1.0 / kSqrt3, 1e-12);
    radii.push_back(s.object.as_circle().radius);
  }
  std::sort(radii.begin(), radii.end());
  EXPECT_NEAR(1.0 / radii[0], k_inner, 1e-9);
  // The outer circle encloses the others: negative Descartes curvature.
  EXPECT_NEAR(-1.0 / radii[1], k_outer, 1e-9);
}

TEST(SolverTest, SoddySigns) {
  const auto inputs = soddy_inputs();
  const auto set = solve_all(inputs);
  ASSERT_EQ(set.size(), 2u);
  for (const auto& s : set.solutions) {
    ASSERT_TRUE(s.signs.has_value());
    const bool inner = s.object.as_circle().radius < 1.0;
    EXPECT_EQ(s.signs->signs, (inner ? std::vector<int>{1, 1, 1}
                                     : std::vector<int>{-1, -1, -1}));
    EXPECT_TRUE(s.signs->same_class(SignCombination{{1, 1, 1}}));
  }
}

TEST(SolverTest, EmptyLabelTripleHasEight) {
  const auto set = solve_all(
      {GC::circle(0, 0, 1), GC::circle(4, 0, 1), GC::circle(2, 3, 1)});
  EXPECT_EQ(set.size(), 8u);
  EXPECT_EQ(count_kind(set, ObjectKind::kCircle), 8);
}

TEST(SolverTest, ConcentricPairWithThirdCircle) {
  const auto set = solve_all(
      {GC::circle(0, 0, 1), GC::circle(0, 0, 3), GC::circle(1.5, 0, 0.4)});
  ASSERT_EQ(set.size(), 8u);
  int a = 0;
  int b = 0;
  for (const auto& s : set.solutions) {
    if (s.kinds[0] == TangencyKind::kExternalCircle) ++a;
    if (s.kinds[0] == TangencyKind::kInternalCircle) ++b;
  }
  EXPECT_EQ(a, 4);
  EXPECT_EQ(b, 4);
}

TEST(SolverTest, ThirdCircleInsideInnerHasNone) {
  const auto set = solve_all(
      {GC::circle(0, 0, 1), GC::circle(0, 0, 3), GC::circle(0.2, 0, 0.4)});
  EXPECT_EQ(set.size(), 0u);
}

TEST(SolverTest, LineAndThreeCirclesHasSix) {
  const double x = 2.0 / std::sqrt(5.0);
  const auto set = solve_all({GC::line({0, 1}, 1), GC::circle(-x, 1, 1),
                              GC::circle(0, 1, 1), GC::circle(x, 1, 1)});
  ASSERT_EQ(set.size(), 6u);
  EXPECT_EQ(count_kind(set, ObjectKind::kLine), 2);
  for (const auto& s : set.solutions) {
    if (s.object.is_circle()) {
      EXPECT_NEAR(s.object.as_circle().radius, 0.4, 1e-9);
    }
  }
}

TEST(SolverTest, SolveSignedAnnulusPair) {
  const std::vector<SignedInput> inputs{{GC::circle(0, 0, 1), 1},
                                        {GC::circle(0, 0, 3), -1},
                                        {GC::circle(1.5, 0, 0.4), 1}};
  const auto out = solve_signed(inputs, Tolerance{});
  ASSERT_EQ(out.size(), 2u);
  for (const auto& s : out) {
    EXPECT_NEAR(std::abs(s.signed_radius), 1.0, 1e-12);
    EXPECT_NEAR(s.center.norm(), 2.0, 1e-12);
    EXPECT_NEAR(distance(s.center, {1.5, 0}), 1.4, 1e-12);
  }
  // The pair is mirrored across the line of centers.
  EXPECT_NEAR(out[0].center.x, out[1].center.x, 1e-12);
  EXPECT_NEAR(out[0].center.y, -out[1].center.y, 1e-12);
}

TEST(SolverTest, SoddyInnerFromSignedSystem) {
  std::vector<SignedInput> inputs;
  for (const auto& c : soddy_inputs()) inputs.push_back({c, 1});
  const auto out = solve_signed(inputs, Tolerance{});
  ASSERT_EQ(out.size(), 2u);
  const auto [k_inner, k_outer] = descartes(1, 1, 1);
  std::vector<double> r{out[0].signed_radius, out[1].signed_radius};
  std::sort(r.begin(), r.end());
  // The outer circle comes back with negative radius (opposite signs).
  EXPECT_NEAR(r[0], 1.0 / k_outer, 1e-9);
  EXPECT_NEAR(r[1], 1.0 / k_inner, 1e-9);
}

TEST(SolverTest, TangentLinesOfTwoCircles) {
  const std::vector<GC> objs{GC::circle(0, 0, 1), GC::circle(4, 0, 1)};
  const auto lines = tangent_lines(objs, Tolerance::for_objects(objs));
  EXPECT_FALSE(lines.infinite);
  EXPECT_EQ(lines.lines.size(), 4u);
}

TEST(SolverTest, NoLineTouchesThreeSpreadCircles) {
  const std::vector<GC> objs{GC::circle(0, 0, 1), GC::circle(4, 0, 1),
                             GC::circle(2, 5, 1)};
  EXPECT_TRUE(tangent_lines(objs, Tolerance::for_objects(objs)).lines.empty());
}

TEST(SolverTest, TangentLinesBetweenParallelLines) {
  const std::vector<GC> objs{GC::line({0, 1}, 0), GC::line({0, 1}, 2),
                             GC::circle(0, 0.5, 0.5)};
  const auto lines = tangent_lines(objs, Tolerance::for_objects(objs));
  ASSERT_EQ(lines.lines.size(), 1u);
  EXPECT_NEAR(lines.lines[0].offset, 1.0, 1e-12);
  EXPECT_NEAR(lines.lines[0].normal.y, 1.0, 1e-12);
}

TEST(SolverTest, TangentLinesWithOneConstraintIsInfinite) {
  const std::vector<GC> objs{GC::circle(0, 0, 1)};
  EXPECT_TRUE(tangent_lines(objs, Tolerance{}).infinite);
}

TEST(SolverTest, PointSolutions) {
  const Tolerance tol;
  const std::vector<GC> general{GC::line({1, 0}, 0), GC::line({0, 1}, 0),
                                GC::line({1, 1}, 1)};
  auto pts = point_solutions(general, tol);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_TRUE(pts[0].is_infinity());

  const std::vector<GC> concurrent{GC::line({1, 0}, 0), GC::line({0, 1}, 0),
                                   GC::line({-2, 1}, 0)};
  pts = point_solutions(concurrent, tol);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_TRUE(pts[0].is_point());
  EXPECT_NEAR(pts[0].as_point().at.norm(), 0.0, 1e-12);
  EXPECT_TRUE(pts[1].is_infinity());

  const std::vector<GC> disjoint{GC::circle(0, 0, 1), GC::circle(4, 0, 1),
                                 GC::circle(2, 3, 1)};
  EXPECT_TRUE(point_solutions(disjoint, tol).empty());
}

TEST(SolverTest, Degeneracy) {
  const Tolerance tol;
  const std::vector<GC> concurrent{GC::line({1, 0}, 0), GC::line({0, 1}, 0),
                                   GC::line({1, 1}, 0)};
  EXPECT_FALSE(is_degenerate(concurrent, tol).degenerate);

  const std::vector<GC> parallel{GC::line({0, 1}, 0), GC::line({0, 1}, 1),
                                 GC::line({0, 1}, 2)};
  const auto rep = is_degenerate(parallel, tol);
  EXPECT_TRUE(rep.degenerate);
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_TRUE(rep.witness->is_infinity());

  const std::vector<GC> touching{GC::circle(0, 0, 1), GC::circle(2, 0, 1),
                                 GC::line({1, 0}, 1)};
  const auto rep2 = is_degenerate(touching, tol);
  EXPECT_TRUE(rep2.degenerate);
  ASSERT_TRUE(rep2.witness->is_point());
  EXPECT_NEAR(distance(rep2.witness->as_point().at, {1, 0}), 0.0, 1e-12);
}

TEST(SolverTest, DegenerateFamilyIsInfinite) {
  const auto set = solve_all(
      {GC::line({0, 1}, 0), GC::line({0, 1}, 1), GC::line({0, 1}, 2)});
  EXPECT_TRUE(set.infinite);
  EXPECT_TRUE(set.solutions.empty());
}

TEST(SolverTest, Errors) {
  const std::vector<GC> two{GC::circle(0, 0, 1), GC::circle(3, 0, 1)};
  try {
    solve(two, Tolerance{});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooFewObjects);
  }
  const std::vector<GC> dup{GC::circle(0, 0, 1), GC::circle(0, 0, 1),
                            GC::circle(5, 0, 1)};
  try {
    solve(dup, Tolerance{});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateInput);
  }
}

TEST(SolverTest, SolutionSignsAnnulus) {
  const std::vector<GC> annulus{GC::circle(0, 0, 1), GC::circle(0, 0, 3)};
  const auto signs = solution_signs(GC::circle(2, 0, 1), annulus, Tolerance{});
  EXPECT_EQ(signs.signs, (std::vector<int>{1, -1}));
  EXPECT_THROW(solution_signs(GC::circle(5, 0, 1), annulus, Tolerance{}),
               GeometryError);
}

TEST(SolverTest, ConcurrentLinesGiveOnlyPoints) {
  // Lines through O: solutions are O and infinity and no circles.
  const auto set = solve_all(
      {GC::line({1, 0}, 0), GC::line({0, 1}, 0), GC::line({-2, 1}, 0)});
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(count_kind(set, ObjectKind::kPoint), 1);
  EXPECT_EQ(count_kind(set, ObjectKind::kInfinity), 1);
}

TEST(SolverTest, InfinityInputLeavesOnlyLines) {
  const auto set =
      solve_all({GC::circle(0, 0, 1), GC::circle(4, 0, 1), GC::infinity()});
  EXPECT_EQ(set.size(), 4u);
  EXPECT_EQ(count_kind(set, ObjectKind::kLine), 4);
}

TEST(SolverTest, PointInputsActAsIncidence) {
  // Through (-1,1) and (1,1), tangent to y=0: one circle and the parallel
  // line y=1.
  const auto set =
      solve_all({GC::point(-1, 1), GC::point(1, 1), GC::line({0, 1}, 0)});
  ASSERT_EQ(set.size(), 2u);
  ASSERT_TRUE(set.solutions[0].object.is_circle());
  ASSERT_TRUE(set.solutions[1].object.is_line());
  EXPECT_NEAR(set.solutions[1].object.as_line().offset, 1.0, 1e-12);
  const auto& c = set.solutions[0].object.as_circle();
  EXPECT_NEAR(c.center.x, 0.0, 1e-12);
  EXPECT_NEAR(c.radius, 1.0, 1e-12);
  EXPECT_NEAR(c.center.y, 1.0, 1e-12);
}

TEST(SolverTest, CanonicalOrderIsSorted) {
  const auto set = solve_all(
      {GC::circle(0, 0, 1), GC::circle(4, 0, 1), GC::circle(2, 3, 1)});
  for (std::size_t i = 1; i < set.size(); ++i) {
    EXPECT_FALSE(
        canonical_less(set.solutions[i].object, set.solutions[i - 1].object));
  }
}

TEST(SolverTest, CollinearCentersGiveMirrorPairs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(-5, 5);
  std::uniform_real_distribution<double> rad(0.3, 2);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SignedInput> in;
    for (int i = 0; i < 3; ++i) {
      in.push_back({GC::circle(pos(rng), 0, rad(rng)), i == 2 ? -1 : 1});
    }
    std::vector<GC> objs;
    for (const auto& s : in) objs.push_back(s.object);
    const Tolerance tol = Tolerance::for_objects(objs);
    if (is_degenerate(objs, tol).degenerate) continue;
    const auto out = solve_signed(in, tol);
    if (out.size() != 2) continue;
    EXPECT_NEAR(out[0].center.x, out[1].center.x, 1e-7);
    EXPECT_NEAR(out[0].center.y, -out[1].center.y, 1e-7);
    EXPECT_NEAR(out[0].signed_radius, out[1].signed_radius, 1e-7);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

TEST(EliminationTest, QuadraticRoots) {
  bool inf = false;
  auto r = elimination::quadratic_roots(1, -3, 2, &inf);
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], 2.0);
  EXPECT_EQ(elimination::quadratic_roots(1, -2, 1, &inf).size(), 1u);
  EXPECT_TRUE(elimination::quadratic_roots(1, 0, 1, &inf).empty());
  EXPECT_EQ(elimination::quadratic_roots(0, 2, -4, &inf).size(), 1u);
  elimination::quadratic_roots(0, 0, 0, &inf);
  EXPECT_TRUE(inf);
}

TEST(EliminationTest, BranchesAreReported) {
  using elimination::Branch;
  // Centers not collinear: independent rows.
  auto eq = [](const GC& g, int s) { return elimination::equation_for(g, s); };
  auto roots = elimination::eliminate({eq(GC::circle(0, 0, 1), 1),
                                       eq(GC::circle(4, 0, 1), 1),
                                       eq(GC::circle(2, 3, 1), 1)});
  EXPECT_EQ(roots.branch, Branch::kIndependentRows);
  EXPECT_GE(roots.xyr.size(), 1u);
  EXPECT_LE(roots.xyr.size(), 2u);
  // Two parallel lines with equal signs: no solution.
  roots = elimination::eliminate({eq(GC::circle(0, 1, 0.5), 1),
                                  eq(GC::line({0, 1}, 0), 1),
                                  eq(GC::line({0, 1}, 2), 1)});
  EXPECT_EQ(roots.branch, Branch::kProportionalNone);
  // Three lines: pure linear solve.
  roots = elimination::eliminate({eq(GC::line({1, 0}, 0), 1),
                                  eq(GC::line({0, 1}, 0), 1),
                                  eq(GC::line({1, 1}, 4), 1)});
  EXPECT_EQ(roots.branch, Branch::kAllLinear);
  ASSERT_EQ(roots.xyr.size(), 1u);
}

}  // namespace
}  // namespace apollonius
