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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "apollonius/classify.h"
#include "apollonius/error.h"
#include "apollonius/solver.h"

namespace apollonius {
namespace {

using GC = GeneralizedCircle;

constexpr double kSqrt2 = std::numbers::sqrt2;

// Tangency from distances alone, independent of the library predicate.
bool touches(const GC& a, const GC& b, double eps = 1e-9) {
  if (a.is_line() && b.is_line()) {
    return std::abs(std::abs(cross(a.as_line().normal, b.as_line().normal))) <
           eps;
  }
  if (a.is_line()) return touches(b, a, eps);
  const Circle& c = a.as_circle();
  if (b.is_line()) {
    const Line& l = b.as_line();
    const double n = l.normal.norm();
    return std::abs(std::abs(dot(l.normal, c.center) - l.offset) / n -
                    c.radius) < eps;
  }
  const Circle& d = b.as_circle();
  const double dist = distance(c.center, d.center);
  return std::abs(dist - (c.radius + d.radius)) < eps ||
         std::abs(dist - std::abs(c.radius - d.radius)) < eps;
}

Scenario scenario(const std::string& name) {
  return std::get<Scenario>(scenario_by_name(name));
}

SolutionSet solve_all(const std::vector<GC>& objects) {
  return solve(objects, Tolerance::for_objects(objects));
}

bool contains(const std::vector<GC>& set, const GC& x, double radius = 1e-7) {
  return std::any_of(set.begin(), set.end(),
                     [&](const GC& s) { return approx_equal(s, x, radius); });
}

GC rotate90(const GC& g) {
  if (g.is_line()) {
    const Line& l = g.as_line();
    return GC::line(l.normal.perp(), l.offset);
  }
  const Circle& c = g.as_circle();
  return GC::circle(c.center.perp(), c.radius);
}

GC reflect_through_origin(const GC& g) {
  if (g.is_line()) return GC::line(-g.as_line().normal, g.as_line().offset);
  const Circle& c = g.as_circle();
  return GC::circle(-c.center, c.radius);
}

TEST(ConstructionsTest, RegistryScenariosValidate) {
  for (const auto& name : registry_names()) {
    const Scenario s = scenario(name);
    EXPECT_EQ(s.name, name);
    EXPECT_TRUE(validate_scenario(s).empty()) << name;
    EXPECT_FALSE(s.provenance.empty());
    for (const auto& e : s.expected_solutions) {
      for (const auto& in : s.inputs) EXPECT_TRUE(touches(e, in)) << name;
    }
  }
}

TEST(ConstructionsTest, UnknownNameThrows) {
  try {
    scenario_by_name("c5");
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownScenario);
  }
  EXPECT_THROW(scenario_by_name("kmn-x-3"), GeometryError);
  EXPECT_THROW(scenario_by_name("kmn-3-3-3"), GeometryError);
}

TEST(ConstructionsTest, QuadrantPairsHaveSixCentrallySymmetricSolutions) {
  const Scenario s = construction_1(1.0, 7.0);
  const auto sols = solve_all(s.inputs).objects();
  ASSERT_EQ(sols.size(), 6u);
  EXPECT_TRUE(contains(sols, GC::line({1, 0}, 0)));
  EXPECT_TRUE(contains(sols, GC::line({0, 1}, 0)));
  for (const auto& x : sols) {
    EXPECT_TRUE(contains(sols, reflect_through_origin(x))) << x.debug_string();
    for (const auto& in : s.inputs) EXPECT_TRUE(touches(x, in, 1e-8));
  }
}

TEST(ConstructionsTest, QuadrantInputsSplitTwoZeroTwoZero) {
  const Scenario s = construction_1();
  const auto frame = SectorFrame::make(GC::line({0, 1}, 0).as_line(),
                                       GC::line({1, 0}, 0).as_line());
  std::array<int, 4> counts{};
  const auto tol = Tolerance::for_objects(s.inputs);
  for (const auto& in : s.inputs)
    ++counts[sector_of(in.as_circle(), frame, tol) - 1];
  const auto d = Distribution::of_sectors(counts);
  EXPECT_EQ(d.canonical_sectors(), (std::array<int, 4>{2, 0, 2, 0}));
}

TEST(ConstructionsTest, QuadrantRatioThreshold) {
  // The circle centered at O touching the inner pair externally and the
  // outer pair internally exists exactly at the threshold ratio.
  const double a2 = kConstruction1MinRatio;
  EXPECT_NEAR(kSqrt2 + 1.0, a2 * kSqrt2 - a2, 1e-12);
  EXPECT_TRUE(validate_scenario(construction_1(1.0, 5.9)).empty());
  EXPECT_TRUE(validate_scenario(construction_1(2.0, 30.0)).empty());
}

TEST(ConstructionsTest, QuadrantBelowThresholdIsRejected) {
  for (auto [a1, a2] :
       {std::pair{1.0, 3.0}, {1.0, 5.8}, {3.0, 1.0}, {0.0, 1.0}, {-1.0, 2.0}}) {
    try {
      construction_1(a1, a2);
      ADD_FAILURE() << a1 << " " << a2;
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
    }
  }
  // Below the threshold only four solutions exist.
  const std::vector<GC> low = {GC::circle(1, 1, 1), GC::circle(-1, -1, 1),
                               GC::circle(3, 3, 3), GC::circle(-3, -3, 3)};
  EXPECT_EQ(solve_all(low).size(), 4u);
}

TEST(ConstructionsTest, MirrorGammaPairGivesSix) {
  const Scenario s = construction_2();
  ASSERT_EQ(s.inputs.size(), 4u);
  const Circle g1 = s.inputs[2].as_circle();
  const Circle g2 = s.inputs[3].as_circle();
  EXPECT_NEAR(g2.center.x, -g1.center.y, 1e-12);
  EXPECT_NEAR(g2.center.y, -g1.center.x, 1e-12);
  EXPECT_NEAR(g2.radius, g1.radius, 1e-12);
  // gamma1 touches omega externally and omega' internally.
  EXPECT_NEAR(distance(g1.center, {1, 1}), g1.radius + 1.0, 1e-12);
  EXPECT_NEAR(distance(g1.center, {-1, -1}), g1.radius - 1.0, 1e-12);

  const auto set = solve_all(s.inputs);
  ASSERT_EQ(set.size(), 6u);
  // gamma1 encloses O: of the four solutions in sectors II and IV the two
  // small ones touch both gammas internally, the two large ones externally.
  int even_sector = 0;
  int external = 0;
  for (const auto& x : set.objects()) {
    ASSERT_TRUE(x.is_circle());
    const Circle c = x.as_circle();
    if (c.center.x * c.center.y >= 0) continue;
    ++even_sector;
    const bool ext1 =
        std::abs(distance(c.center, g1.center) - (g1.radius + c.radius)) < 1e-9;
    const bool ext2 =
        std::abs(distance(c.center, g2.center) - (g2.radius + c.radius)) < 1e-9;
    EXPECT_EQ(ext1, ext2);
    if (ext1) ++external;
  }
  EXPECT_EQ(external, 2);
  EXPECT_EQ(even_sector, 4);
}

TEST(ConstructionsTest, MirrorGammaBranchSweep) {
  for (double branch = -3.0; branch <= 3.0; branch += 0.25) {
    EXPECT_TRUE(validate_scenario(construction_2(1.0, branch)).empty())
        << branch;
  }
  EXPECT_TRUE(validate_scenario(construction_2(2.5)).empty());
}

TEST(ConstructionsTest, MirrorGammaErrors) {
  try {
    construction_2(0.0);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
  }
  // Far along the branch O approaches gamma1 and the pair stops working.
  try {
    construction_2(1.0, 40.0);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoFeasibleGamma);
  }
}

TEST(ConstructionsTest, StripCirclesMatchClosedForm) {
  const Scenario s = construction_3();
  const double x = 2.0 / std::sqrt(5.0);
  EXPECT_NEAR(
      s.inputs[3].as_circle().center.x - s.inputs[2].as_circle().center.x, x,
      1e-15);
  const auto sols = solve_all(s.inputs).objects();
  ASSERT_EQ(sols.size(), 6u);
  int circles = 0;
  for (const auto& g : sols) {
    if (!g.is_circle()) continue;
    ++circles;
    const Circle& c = g.as_circle();
    EXPECT_NEAR(c.radius, 0.4, 1e-9);
    // Internal to the middle circle: |x|^2 + r^2 = (1 - r)^2.
    EXPECT_NEAR(c.center.x * c.center.x, 1.0 - 2.0 * 0.4, 1e-9);
    EXPECT_NEAR(std::abs(c.center.y - 1.0), 0.4, 1e-9);
  }
  EXPECT_EQ(circles, 4);
  EXPECT_TRUE(contains(sols, GC::line({0, 1}, 0)));
  EXPECT_TRUE(contains(sols, GC::line({0, 1}, 2)));
}

TEST(ConstructionsTest, ConcentricPairMatchesClosedForm) {
  const Scenario s = construction_4();
  const Circle inner = s.inputs[0].as_circle();
  const Circle outer = s.inputs[1].as_circle();
  EXPECT_NEAR(outer.radius / inner.radius, 3.0 + 2.0 * kSqrt2, 1e-12);
  for (int i : {2, 3}) {
    const Circle a = s.inputs[i].as_circle();
    const double tangent_length =
        std::sqrt(a.center.norm2() - a.radius * a.radius);
    EXPECT_NEAR(tangent_length, 1.0 + kSqrt2, 1e-12);
    EXPECT_NEAR(tangent_length * tangent_length, outer.radius * inner.radius,
                1e-12);
  }
  EXPECT_NEAR(
      dot(s.inputs[2].as_circle().center, s.inputs[3].as_circle().center), 0.0,
      1e-12);

  const auto sols = solve_all(s.inputs).objects();
  ASSERT_EQ(sols.size(), 6u);
  const auto tol = Tolerance::for_objects(s.inputs);
  int a_count = 0;
  int b_count = 0;
  for (const auto& x : sols) {
    (annulus_kind(x, inner, outer, tol) == AnnulusKind::kA ? a_count
                                                           : b_count)++;
  }
  EXPECT_EQ(b_count, 4);
  EXPECT_EQ(a_count, 2);
}

TEST(ConstructionsTest, SquaresHaveSixFourfoldSymmetricSolutions) {
  for (int variant : {1, 2}) {
    const Scenario s = example_square(variant);
    const auto sols = solve_all(s.inputs).objects();
    ASSERT_EQ(sols.size(), 6u) << variant;
    for (const auto& x : sols) EXPECT_TRUE(contains(sols, rotate90(x)));
  }
  EXPECT_THROW(example_square(3), GeometryError);
}

TEST(ConstructionsTest, SquareRatiosSitInsideSixSolutionIntervals) {
  // Six solutions for ratio in (0, 1) and (sqrt2, inf); fewer elsewhere.
  auto count = [](double ratio) {
    const double h = 1.0 / ratio;
    return solve_all({GC::circle(h, h, 1), GC::circle(-h, h, 1),
                      GC::circle(-h, -h, 1), GC::circle(h, -h, 1)})
        .size();
  };
  EXPECT_EQ(count(kSquare1Ratio), 6u);
  EXPECT_EQ(count(kSquare2Ratio), 6u);
  EXPECT_LT(kSquare1Ratio, 1.0);
  EXPECT_GT(kSquare2Ratio, kSqrt2);
  EXPECT_EQ(count(1.2), 2u);
}

TEST(ConstructionsTest, AnyFiveOfSixSquareSolutionsGiveTheSquares) {
  const Scenario square = example_square(1);
  const auto six = solve_all(square.inputs).objects();
  ASSERT_EQ(six.size(), 6u);
  for (std::size_t skip = 0; skip < six.size(); ++skip) {
    std::vector<GC> five;
    for (std::size_t i = 0; i < six.size(); ++i) {
      if (i != skip) five.push_back(six[i]);
    }
    EXPECT_FALSE(is_degenerate(five, Tolerance::for_objects(five)).degenerate);
    const auto four = solve_all(five).objects();
    ASSERT_EQ(four.size(), 4u) << skip;
    for (const auto& c : square.inputs) EXPECT_TRUE(contains(four, c));
  }
}

TEST(ConstructionsTest, BipartiteTableMatchesBounds) {
  for (int m = 0; m <= 9; ++m) {
    for (int n = 0; n <= 9; ++n) {
      const int lo = std::min(m, n);
      const int hi = std::max(m, n);
      const bool plus = lo <= 2 || (lo == 3 && hi <= 8) || (lo == 4 && hi <= 6);
      EXPECT_EQ(kmn_realizable(m, n), plus) << m << "," << n;
    }
  }
}

TEST(ConstructionsTest, BipartiteWitnessesTouchAcrossParts) {
  for (int m = 0; m <= 9; ++m) {
    for (int n = 0; n <= m; ++n) {
      const auto w = kmn_witness(m, n);
      if (!kmn_realizable(m, n)) {
        EXPECT_TRUE(std::holds_alternative<Unrealizable>(w));
        continue;
      }
      const Scenario& s = std::get<Scenario>(w);
      ASSERT_TRUE(s.parts.has_value());
      EXPECT_EQ(s.parts->first, m);
      EXPECT_EQ(s.parts->second, n);
      ASSERT_EQ(static_cast<int>(s.inputs.size()), m + n);
      EXPECT_TRUE(validate_scenario(s).empty()) << s.name;
      for (int i = 0; i < m; ++i) {
        for (int j = m; j < m + n; ++j) {
          EXPECT_TRUE(touches(s.inputs[i], s.inputs[j], 1e-7))
              << s.name << " " << i << "-" << j;
        }
      }
      if (m + n >= 3) {
        EXPECT_FALSE(is_degenerate(s.inputs, Tolerance::for_objects(s.inputs))
                         .degenerate)
            << s.name;
      }
    }
  }
}

TEST(ConstructionsTest, BipartiteCitations) {
  auto citation = [](int m, int n) {
    return std::get<Unrealizable>(kmn_witness(m, n)).citation;
  };
  EXPECT_EQ(citation(9, 3), BoundCitation::kTripleBound);
  EXPECT_EQ(citation(7, 4), BoundCitation::kQuadrupleBound);
  EXPECT_EQ(citation(5, 5), BoundCitation::kQuintupleBound);
  EXPECT_EQ(citation(9, 9), BoundCitation::kQuintupleBound);
  EXPECT_EQ(citation(4, 7), BoundCitation::kQuadrupleBound);
  const auto u = std::get<Unrealizable>(scenario_by_name("kmn-5-5"));
  EXPECT_NE(u.reason.find(to_string(BoundCitation::kQuintupleBound)),
            std::string::npos);
}

TEST(ConstructionsTest, BipartiteNamedExamples) {
  const Scenario a = std::get<Scenario>(kmn_witness(8, 3));
  EXPECT_EQ(a.name, "kmn-8-3");
  // The three separated circles carry the empty label.
  const auto tol = Tolerance::for_objects(a.inputs);
  EXPECT_EQ(
      fitzgerald_label(a.inputs[8], a.inputs[9], a.inputs[10], tol).to_string(),
      "∅");
  const Scenario b = std::get<Scenario>(kmn_witness(2, 9));
  EXPECT_EQ(b.name, "kmn-9-2");
  const Circle inner = b.inputs[9].as_circle();
  const Circle outer = b.inputs[10].as_circle();
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(annulus_kind(b.inputs[i], inner, outer,
                           Tolerance::for_objects(b.inputs)),
              AnnulusKind::kB);
  }
}

}  // namespace
}  // namespace apollonius
