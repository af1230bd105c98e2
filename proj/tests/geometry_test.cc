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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace apollonius {
namespace {

using GC = GeneralizedCircle;

const Tolerance kTol{};

TEST(GeometryTest, KindsAndAccessors) {
  EXPECT_EQ(GC::circle(1, 2, 3).kind(), ObjectKind::kCircle);
  EXPECT_EQ(GC::line({0, 1}, 2).kind(), ObjectKind::kLine);
  EXPECT_EQ(GC::point(1, 1).kind(), ObjectKind::kPoint);
  EXPECT_EQ(GC::infinity().kind(), ObjectKind::kInfinity);
  EXPECT_EQ(GC().kind(), ObjectKind::kInfinity);
  EXPECT_TRUE(GC::infinity().is_any_point());
  EXPECT_THROW(GC::point(0, 0).as_circle(), std::bad_variant_access);
}

TEST(GeometryTest, LineThroughPointAndDirection) {
  const GC l = GC::line_through({0, 3}, {2, 0});
  ASSERT_TRUE(l.is_line());
  EXPECT_NEAR(l.as_line().signed_distance({5, 3}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l.as_line().signed_distance({0, 0})), 3.0, 1e-15);
}

TEST(GeometryTest, NormalizeCanonicalizesLines) {
  const GC l = normalize(GC::line({0, -2}, 4), kTol);
  EXPECT_DOUBLE_EQ(l.as_line().normal.x, 0.0);
  EXPECT_DOUBLE_EQ(l.as_line().normal.y, 1.0);
  EXPECT_DOUBLE_EQ(l.as_line().offset, -2.0);
  // Idempotent bit for bit.
  const GC again = normalize(l, kTol);
  EXPECT_EQ(again.as_line().offset, l.as_line().offset);
  EXPECT_EQ(again.as_line().normal, l.as_line().normal);
}

TEST(GeometryTest, NormalizeRejectsDegenerateInput) {
  try {
    normalize(GC::circle(0, 0, 0.0), kTol);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateRadius);
  }
  EXPECT_TRUE(normalize(GC::circle(1, 1, 0.0), kTol, true).is_point());
  try {
    normalize(GC::line({0, 0}, 1), kTol);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateLine);
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    normalize(GC::circle(nan, 0, 1), kTol);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteCoordinate);
  }
  // Negative radius is a sign convention, not an error.
  EXPECT_DOUBLE_EQ(normalize(GC::circle(0, 0, -2), kTol).as_circle().radius, 2);
}

TEST(GeometryTest, ToleranceScalesWithConfiguration) {
  const std::vector<GC> small{GC::circle(0, 0, 1), GC::circle(3, 0, 1)};
  const std::vector<GC> big{GC::circle(0, 0, 1000), GC::circle(3000, 0, 1000)};
  const Tolerance a = Tolerance::for_objects(small);
  const Tolerance b = Tolerance::for_objects(big);
  EXPECT_NEAR(b.eps() / a.eps(), 1000.0, 1e-6);
  EXPECT_GE(a.widened_for(GC::circle(0, 0, 500)).eps(), 500 * a.length_eps);
}

TEST(GeometryTest, TangencyKinds) {
  EXPECT_EQ(tangency(GC::circle(0, 0, 1), GC::circle(3, 0, 2), kTol),
            TangencyKind::kExternalCircle);
  EXPECT_EQ(tangency(GC::circle(0, 0, 3), GC::circle(1, 0, 2), kTol),
            TangencyKind::kInternalCircle);
  EXPECT_EQ(tangency(GC::circle(0, 0, 1), GC::line({0, 1}, 1), kTol),
            TangencyKind::kLineTangent);
  EXPECT_EQ(tangency(GC::line({0, 1}, 1), GC::line({0, -1}, 2), kTol),
            TangencyKind::kParallelLines);
  EXPECT_EQ(tangency(GC::circle(0, 0, 1), GC::point(0, 1), kTol),
            TangencyKind::kPointIncidence);
  EXPECT_EQ(tangency(GC::line({1, 0}, 0), GC::infinity(), kTol),
            TangencyKind::kPointIncidence);
  EXPECT_EQ(tangency(GC::circle(0, 0, 1), GC::circle(1, 0, 1), kTol),
            TangencyKind::kNone);
  EXPECT_EQ(tangency(GC::circle(0, 0, 1), GC::infinity(), kTol),
            TangencyKind::kNone);
  EXPECT_THROW(tangency(GC::circle(0, 0, 1), GC::circle(0, 0, 1), kTol),
               GeometryError);
  EXPECT_THROW(tangency(GC::line({0, 1}, 1), GC::line({0, -1}, -1), kTol),
               GeometryError);
}

TEST(GeometryTest, TangencyRespectsTolerance) {
  const double gap = 1e-10;
  EXPECT_TRUE(is_tangent(
      tangency(GC::circle(0, 0, 1), GC::circle(2 + gap, 0, 1), kTol)));
  EXPECT_FALSE(is_tangent(
      tangency(GC::circle(0, 0, 1), GC::circle(2 + 1e-7, 0, 1), kTol)));
}

TEST(GeometryTest, IntersectionPointsLieOnBothObjects) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_real_distribution<double> r(0.3, 3);
  for (int i = 0; i < 200; ++i) {
    const GC a = GC::circle(u(rng), u(rng), r(rng));
    const GC b = (i % 3 == 0)
                     ? normalize(GC::line({u(rng), u(rng)}, u(rng)), kTol)
                     : GC::circle(u(rng), u(rng), r(rng));
    const auto pts = intersection_points(a, b, kTol);
    for (const auto& p : pts) {
      ASSERT_TRUE(p.is_point());
      // Distance oracle, not lies_on.
      const Vec2 q = p.as_point().at;
      EXPECT_NEAR(distance(q, a.as_circle().center), a.as_circle().radius,
                  1e-9);
      if (b.is_circle()) {
        EXPECT_NEAR(distance(q, b.as_circle().center), b.as_circle().radius,
                    1e-9);
      } else {
        EXPECT_NEAR(b.as_line().signed_distance(q), 0.0, 1e-9);
      }
    }
    if (!is_tangent(tangency(a, b, kTol))) {
      EXPECT_EQ(static_cast<int>(pts.size()), intersection_count(a, b, kTol));
    }
  }
}

TEST(GeometryTest, CrossingLinesMeetAtInfinityToo) {
  const auto pts =
      intersection_points(GC::line({1, 0}, 1), GC::line({0, 1}, 2), kTol);
  ASSERT_EQ(pts.size(), 2u);
  int finite = 0;
  int infinite = 0;
  for (const auto& p : pts) {
    if (p.is_point()) {
      ++finite;
      EXPECT_NEAR(p.as_point().at.x, 1.0, 1e-15);
      EXPECT_NEAR(p.as_point().at.y, 2.0, 1e-15);
    }
    if (p.is_infinity()) ++infinite;
  }
  EXPECT_EQ(finite, 1);
  EXPECT_EQ(infinite, 1);
}

TEST(GeometryTest, CommonPointOfThree) {
  const auto p = common_point_of_three(GC::circle(1, 0, 1), GC::circle(0, 1, 1),
                                       GC::line({1, -1}, 0), kTol);
  ASSERT_FALSE(p.empty());
  bool origin = false;
  for (const auto& q : p) {
    origin = origin || (q.is_point() && q.as_point().at.norm() < 1e-12);
  }
  EXPECT_TRUE(origin);
  EXPECT_TRUE(common_point_of_three(GC::circle(0, 0, 1), GC::circle(5, 0, 1),
                                    GC::circle(0, 5, 1), kTol)
                  .empty());
}

TEST(GeometryTest, SidesAndSeparation) {
  const GC s = GC::circle(0, 0, 5);
  EXPECT_EQ(side_of(s, GC::circle(0, 0, 1), kTol), Side::kInside);
  EXPECT_EQ(side_of(s, GC::circle(10, 0, 1), kTol), Side::kOutside);
  EXPECT_EQ(side_of(s, GC::circle(5, 0, 1), kTol), Side::kCrossing);
  EXPECT_EQ(side_of(s, GC::point(5, 0), kTol), Side::kOn);
  EXPECT_TRUE(separates(s, GC::circle(0, 0, 1), GC::circle(10, 0, 1), kTol));
  EXPECT_FALSE(separates(s, GC::circle(0, 0, 1), GC::circle(1, 0, 1), kTol));
  EXPECT_THROW(separates(s, GC::circle(5, 0, 1), GC::circle(0, 0, 1), kTol),
               GeometryError);
}

TEST(GeometryTest, ApproxEqualTreatsOppositeNormalsAsOneLine) {
  EXPECT_TRUE(approx_equal(GC::line({0, 1}, 2), GC::line({0, -1}, -2), 1e-12));
  EXPECT_FALSE(approx_equal(GC::line({0, 1}, 2), GC::line({0, 1}, 2.1), 1e-3));
  EXPECT_FALSE(approx_equal(GC::point(0, 0), GC::circle(0, 0, 1e-20), 1.0));
}

TEST(GeometryTest, DebugStringsNameTheKind) {
  EXPECT_NE(GC::circle(1, 2, 3).debug_string().find("Circle"),
            std::string::npos);
  EXPECT_NE(GC::line({0, 1}, 2).debug_string().find("Line"), std::string::npos);
  EXPECT_EQ(to_string(TangencyKind::kExternalCircle).empty(), false);
}

}  // namespace
}  // namespace apollonius
