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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

namespace apollonius {
namespace {

using GC = GeneralizedCircle;

const Line kX0{{1, 0}, 0};  // x = 0
const Line kY0{{0, 1}, 0};  // y = 0
const Line kY2{{0, 1}, 2};  // y = 2

Tolerance tol_for(std::vector<GC> objs) { return Tolerance::for_objects(objs); }

TEST(FitzgeraldTest, DisjointTripleIsEmpty) {
  const GC a = GC::circle(0, 0, 1), b = GC::circle(4, 0, 1),
           c = GC::circle(2, 3, 1);
  const auto label = fitzgerald_label(a, b, c, tol_for({a, b, c}));
  EXPECT_EQ(label.to_string(), "∅");
}

TEST(FitzgeraldTest, TangentTripleIsUnbracketed) {
  const GC a = GC::circle(0, 0, 1), b = GC::circle(2, 0, 1),
           c = GC::circle(1, std::sqrt(3.0), 1);
  const auto label = fitzgerald_label(a, b, c, tol_for({a, b, c}));
  EXPECT_EQ(label.to_string(), "TTT");
  EXPECT_FALSE(label.bracketed);
}

TEST(FitzgeraldTest, NestedCirclesSeparate) {
  const GC w = GC::circle(0, 0, 1), big = GC::circle(0, 0, 3),
           a = GC::circle(0.2, 0, 0.4);
  EXPECT_EQ(fitzgerald_label(w, big, a, tol_for({w, big, a})).to_string(), "S");
}

TEST(FitzgeraldTest, ParallelLinesAreBracketedTriple) {
  const GC a = GC::line({0, 1}, 0), b = GC::line({0, 1}, 1),
           c = GC::line({0, 1}, 2);
  EXPECT_EQ(fitzgerald_label(a, b, c, Tolerance{}).to_string(), "[TTT]");
}

TEST(SectorTest, AxesNumbering) {
  const auto frame = SectorFrame::make(kX0, kY0);
  const Tolerance tol{1e-9, 10};
  EXPECT_EQ(sector_of({{1, 1}, 1}, frame, tol), 1);
  EXPECT_EQ(sector_of({{-2, 2}, 2}, frame, tol), 2);
  EXPECT_EQ(sector_of({{-1, -1}, 1}, frame, tol), 3);
  EXPECT_EQ(sector_of({{3, -3}, 3}, frame, tol), 4);
  EXPECT_THROW(sector_of({{3, -2}, 3}, frame, tol), GeometryError);
}

TEST(SectorTest, CallerChosenOrigin) {
  const double pi = std::acos(-1.0);
  const auto frame = SectorFrame::make(kX0, kY0, 3 * pi / 4);
  EXPECT_EQ(sector_of({{-2, 2}, 2}, frame, Tolerance{}), 1);
  EXPECT_EQ(sector_of({{1, 1}, 1}, frame, Tolerance{}), 4);
}

TEST(DistributionTest, Isomorphism) {
  const auto a = Distribution::of_sectors({0, 1, 2, 3});
  const auto b = Distribution::of_sectors({2, 1, 0, 3});
  const auto c = Distribution::of_sectors({0, 2, 1, 3});
  EXPECT_TRUE(a.isomorphic(b));
  EXPECT_FALSE(a.isomorphic(c));
  EXPECT_EQ(Distribution::of_sectors({1, 0, 1, 2}).canonical_sectors(),
            (std::array<int, 4>{2, 1, 0, 1}));
  EXPECT_EQ(Distribution().to_string(), "0-0-0-0");
  EXPECT_EQ(Distribution::of_parallel(3, 1).to_string(), "3+1");
}

struct IRow {
  int row;
  GC alpha;
  std::array<int, 4> dist;
  int points;  // O or infinity count
  int total;
  std::string label;
};

class ITypeTest : public ::testing::TestWithParam<IRow> {};

TEST_P(ITypeTest, MatchesTable) {
  const IRow& p = GetParam();
  const auto frame = SectorFrame::make(kX0, kY0);
  const auto res = i_type(frame, p.alpha, tol_for({kX0, kY0, p.alpha}));
  EXPECT_EQ(res.row, p.row);
  EXPECT_TRUE(res.distribution.isomorphic(Distribution::of_sectors(p.dist)))
      << res.distribution.to_string();
  EXPECT_EQ(static_cast<int>(res.extra_points.size()), p.points);
  EXPECT_EQ(res.total, p.total);
  EXPECT_EQ(res.label.to_string(), p.label);
}

const double kSqrt2 = std::sqrt(2.0);

INSTANTIATE_TEST_SUITE_P(
    TableRows, ITypeTest,
    ::testing::Values(
        IRow{1, GC::circle(0, 0, 1), {2, 2, 2, 2}, 0, 8, "III"},
        IRow{2, GC::circle(1, 1, 1.2), {4, 2, 0, 2}, 0, 8, "III"},
        IRow{3, GC::circle(3, 0.5, 1), {2, 2, 0, 0}, 0, 4, "II"},
        IRow{4, GC::circle(3, 3, 1), {4, 0, 0, 0}, 0, 4, "I"},
        IRow{5, GC::circle(1, 1, kSqrt2), {2, 1, 0, 1}, 1, 5, "[III]"},
        IRow{5, GC::line({1, 1}, 1), {2, 1, 0, 1}, 1, 5, "[III]"},
        IRow{6, GC::line({-2, 1}, 0), {0, 0, 0, 0}, 2, 2, "[III]"},
        IRow{7, GC::circle(2, 0.5, 2), {3, 1, 0, 2}, 0, 6, "IIT"},
        IRow{8, GC::circle(3, 1, 1), {3, 1, 0, 0}, 0, 4, "IT"},
        IRow{9, GC::circle(1, 1, 1), {2, 1, 0, 1}, 0, 4, "ITT"},
        IRow{10, GC::circle(1, 0, 1), {1, 0, 0, 1}, 1, 3, "[IIT]"},
        IRow{10, GC::line({1, 0}, 1), {1, 0, 0, 1}, 1, 3, "[IIT]"}));

TEST(ITypeExtraTest, RowFivePointDependsOnVariant) {
  const auto frame = SectorFrame::make(kX0, kY0);
  const GC circle = GC::circle(1, 1, kSqrt2);
  auto res = i_type(frame, circle, tol_for({kX0, kY0, circle}));
  ASSERT_EQ(res.extra_points.size(), 1u);
  EXPECT_TRUE(res.extra_points[0].is_point());
  const GC line = GC::line({1, 1}, 1);
  res = i_type(frame, line, tol_for({kX0, kY0, line}));
  ASSERT_EQ(res.extra_points.size(), 1u);
  EXPECT_TRUE(res.extra_points[0].is_infinity());
}

TEST(ITypeExtraTest, AlphaOnFrameLineThrows) {
  const auto frame = SectorFrame::make(kX0, kY0);
  try {
    i_type(frame, GC(kY0), Tolerance{});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAlphaCoincidesWithLine);
  }
}

TEST(ITypeExtraTest, TypeTwoMeetsBothSidesOfASector) {
  const auto frame = SectorFrame::make(kX0, kY0);
  for (double r : {1.05, 1.2, 1.4}) {
    const GC alpha = GC::circle(1, 1, r);
    ASSERT_EQ(i_type(frame, alpha, tol_for({kX0, kY0, alpha})).row, 2);
    EXPECT_TRUE(meets_both_sides_of_a_sector(frame, alpha, Tolerance{}));
  }
}

struct TRow {
  int row;
  GC alpha;
  int circles;
  int lines;
  bool infinite;
  std::string label;
};

class TTypeTest : public ::testing::TestWithParam<TRow> {};

TEST_P(TTypeTest, MatchesTable) {
  const TRow& p = GetParam();
  const auto res = t_type(kY0, kY2, p.alpha, tol_for({kY0, kY2, p.alpha}));
  EXPECT_EQ(res.row, p.row);
  EXPECT_EQ(res.infinite, p.infinite);
  EXPECT_EQ(res.distribution.circles, p.circles);
  if (!p.infinite) {
    EXPECT_EQ(res.distribution.lines, p.lines);
    EXPECT_EQ(res.total, p.circles + p.lines);
  }
  EXPECT_EQ(res.label.to_string(), p.label);
}

INSTANTIATE_TEST_SUITE_P(
    TableRows, TTypeTest,
    ::testing::Values(TRow{1, GC::circle(0, 1, 0.5), 4, 2, false, "T"},
                      TRow{2, GC::circle(0, 1, 1.5), 4, 2, false, "IIT"},
                      TRow{3, GC::circle(0, 0.5, 1), 2, 2, false, "IT"},
                      TRow{4, GC::line({1, 0}, 0), 2, 0, false, "[IIT]"},
                      TRow{5, GC::circle(0, 0.5, 0.5), 3, 1, false, "TT"},
                      TRow{6, GC::circle(0, 0.5, 1.5), 3, 1, false, "ITT"},
                      TRow{7, GC::circle(0, 1, 1), 2, 0, false, "TTT"},
                      TRow{8, GC::circle(0, -1, 1), 1, 1, false, "STT"},
                      TRow{9, GC::circle(0, -2, 1), 0, 2, false, "ST"},
                      TRow{10, GC::line({0, 1}, 1), 0, 0, true, "[TTT]"}));

TEST(AnnulusTest, Kinds) {
  const Circle inner{{0, 0}, 1};
  const Circle outer{{0, 0}, 3};
  const Tolerance tol{1e-9, 6};
  EXPECT_EQ(annulus_kind(GC::circle(2, 0, 1), inner, outer, tol),
            AnnulusKind::kA);
  EXPECT_EQ(annulus_kind(GC::circle(1, 0, 2), inner, outer, tol),
            AnnulusKind::kB);
  EXPECT_THROW(annulus_kind(GC::circle(5, 0, 1), inner, outer, tol),
               GeometryError);
}

TEST(AnnulusTest, TypeBCirclesPairwiseIntersect) {
  const Tolerance tol{1e-9, 6};
  std::vector<GC> b;
  for (int k = 0; k < 12; ++k) {
    const double t = 0.5 * k;
    b.push_back(GC::circle(std::cos(t), std::sin(t), 2));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      EXPECT_EQ(intersection_count(b[i], b[j], tol), 2);
    }
  }
}

TEST(AnnulusTest, SixOfEightContainIntersectingMirrorPair) {
  const std::vector<GC> in{GC::circle(0, 0, 1), GC::circle(0, 0, 3),
                           GC::circle(1.5, 0, 0.4)};
  const Tolerance tol = Tolerance::for_objects(in);
  const auto set = solve(in, tol);
  ASSERT_EQ(set.size(), 8u);
  const auto objs = set.objects();
  // Every 6-subset (drop two of eight).
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      bool found = false;
      for (int i = 0; i < 8 && !found; ++i) {
        for (int j = i + 1; j < 8 && !found; ++j) {
          if (i == a || i == b || j == a || j == b) continue;
          const Circle& p = objs[i].as_circle();
          const Circle& q = objs[j].as_circle();
          const bool mirror = std::abs(p.center.x - q.center.x) < 1e-9 &&
                              std::abs(p.center.y + q.center.y) < 1e-9 &&
                              std::abs(p.radius - q.radius) < 1e-9;
          found = mirror && intersection_count(objs[i], objs[j], tol) == 2;
        }
      }
      EXPECT_TRUE(found) << "dropped " << a << "," << b;
    }
  }
}

}  // namespace
}  // namespace apollonius
