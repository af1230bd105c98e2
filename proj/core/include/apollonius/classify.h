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

// Configuration classification: Fitzgerald labels of triples, the position of
// a third object relative to two crossing or two parallel lines, sector
// distributions and annulus kinds.

#ifndef APOLLONIUS_CLASSIFY_H_
#define APOLLONIUS_CLASSIFY_H_

#include <array>
#include <string>
#include <vector>

#include "apollonius/geometry.h"
#include "apollonius/solver.h"

namespace apollonius {

// Letters I (intersecting pair), T (tangent pair) and S (one object separates
// the other two); bracketed when all three share a point.
struct FitzgeraldLabel {
  int intersecting = 0;
  int tangent = 0;
  bool separated = false;
  bool bracketed = false;

  // Letters in S, I, T order, e.g. "STT", "[IIT]"; "∅" when empty.
  std::string to_string() const;
  bool operator==(const FitzgeraldLabel&) const = default;
};

// S is evaluated on closed sides: an object touching the separator still
// counts as lying on one side of it.
FitzgeraldLabel fitzgerald_label(const GeneralizedCircle& a,
                                 const GeneralizedCircle& b,
                                 const GeneralizedCircle& c,
                                 const Tolerance& tol);

// Two crossing lines meeting at `vertex`. The four rays from the vertex cut
// the plane into sectors numbered counter-clockwise from the one whose
// bisector has angle `first_bisector` (radians in [0, 2pi)).
struct SectorFrame {
  Line l1;
  Line l2;
  Vec2 vertex;
  double first_bisector = 0.0;

  // Sector I is the one with the smallest non-negative bisector angle unless
  // `first_bisector` is given.
  static SectorFrame make(const Line& l1, const Line& l2);
  static SectorFrame make(const Line& l1, const Line& l2,
                          double first_bisector);

  // Ray angles in [0, 2pi), ascending.
  std::array<double, 4> ray_angles() const;
};

// Sector 1..4 of a circle tangent to both frame lines. Throws kNotAdmissible
// otherwise.
int sector_of(const Circle& c, const SectorFrame& frame, const Tolerance& tol);

// Counts of admissible solutions: per sector (x-y-z-t) for crossing lines,
// circles + lines for parallel lines.
struct Distribution {
  bool parallel = false;
  std::array<int, 4> sectors{};
  int circles = 0;
  int lines = 0;
  bool infinite_lines = false;

  std::string to_string() const;
  // Equal up to cyclic shifts and reversal of the sector sequence.
  bool isomorphic(const Distribution& other) const;
  // Lexicographically largest sequence among the eight symmetric images.
  std::array<int, 4> canonical_sectors() const;

  static Distribution of_sectors(std::array<int, 4> counts);
  static Distribution of_parallel(int circles, int lines);
};

// Sector distribution of the circle solutions; points are skipped. Throws
// kNotAdmissible for a circle that is not tangent to both lines.
Distribution distribution(const SolutionSet& solutions,
                          const SectorFrame& frame, const Tolerance& tol);

// x + y distribution for two parallel lines (circles, then lines other than
// the inputs).
Distribution parallel_distribution(const SolutionSet& solutions, const Line& l1,
                                   const Line& l2, const Tolerance& tol);

struct ITypeResult {
  int row = 0;  // 1..10
  FitzgeraldLabel label;
  Distribution distribution;
  std::vector<GeneralizedCircle> extra_points;  // O and/or infinity
  int total = 0;
  SolutionSet solutions;
};

// Position of `alpha` relative to two crossing lines. Throws
// kAlphaCoincidesWithLine when alpha equals a frame line.
ITypeResult i_type(const SectorFrame& frame, const GeneralizedCircle& alpha,
                   const Tolerance& tol);

struct TTypeResult {
  int row = 0;  // 1..10
  FitzgeraldLabel label;
  Distribution distribution;
  bool infinite = false;
  // Admissible solutions only: circles between the lines and lines parallel
  // to them. A common point of all three objects is listed separately.
  int total = 0;
  std::vector<GeneralizedCircle> extra_points;
  SolutionSet solutions;
};

// Position of `alpha` relative to two parallel lines.
TTypeResult t_type(const Line& l1, const Line& l2,
                   const GeneralizedCircle& alpha, const Tolerance& tol);

// Roman numeral for a row index 1..10.
std::string roman(int row);

// True when alpha meets both bounding rays of one of the four sectors.
bool meets_both_sides_of_a_sector(const SectorFrame& frame,
                                  const GeneralizedCircle& alpha,
                                  const Tolerance& tol);

enum class AnnulusKind { kA, kB };

std::string to_string(AnnulusKind kind);

// A: tangent to the inner circle externally; B: internally. Throws
// kNotAdmissible unless s touches both circles of a concentric pair.
AnnulusKind annulus_kind(const GeneralizedCircle& s, const Circle& inner,
                         const Circle& outer, const Tolerance& tol);

}  // namespace apollonius

#endif  // APOLLONIUS_CLASSIFY_H_
