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

#ifndef APOLLONIUS_INVERSION_H_
#define APOLLONIUS_INVERSION_H_

#include <optional>

#include "apollonius/geometry.h"

namespace apollonius {

// p -> center + power * (p - center) / |p - center|^2.
//
// A negative power is an inversion composed with the point reflection about
// `center` (an "imaginary radius" inversion). Every map is an involution.
struct InversionMap {
  Vec2 center;
  double power = 1.0;

  Vec2 apply(Vec2 p) const;
};

GeneralizedCircle invert(const GeneralizedCircle& obj, const InversionMap& m,
                         const Tolerance& tol);

// Result of a normal-form reduction. An empty `inversion` is the identity:
// the pair is already in the requested form.
struct NormalFormMap {
  std::optional<InversionMap> inversion;

  GeneralizedCircle apply(const GeneralizedCircle& obj,
                          const Tolerance& tol) const {
    return inversion ? invert(obj, *inversion, tol) : obj;
  }
};

struct ConcentricMap {
  NormalFormMap map;
  // Common center of the two images.
  Vec2 center;
};

// Limiting points of the coaxal pencil spanned by two disjoint objects
// (circle/circle or circle/line). Throws kNotDisjoint otherwise.
std::pair<Vec2, Vec2> limiting_points(const GeneralizedCircle& a,
                                      const GeneralizedCircle& b,
                                      const Tolerance& tol);

// Sends two disjoint objects to concentric circles by inverting about the
// limiting point with the larger clearance from both boundaries.
ConcentricMap map_to_concentric(const GeneralizedCircle& a,
                                const GeneralizedCircle& b,
                                const Tolerance& tol);

// Sends two objects meeting in two points to crossing lines. Crossing lines
// are returned unchanged (identity).
NormalFormMap map_to_intersecting_lines(const GeneralizedCircle& a,
                                        const GeneralizedCircle& b,
                                        const Tolerance& tol);

// Sends two tangent objects to parallel lines (inversion at the touching
// point). Parallel lines are returned unchanged (identity).
NormalFormMap map_to_parallel_lines(const GeneralizedCircle& a,
                                    const GeneralizedCircle& b,
                                    const Tolerance& tol);

// Inversion centered at `p` that maps `c` onto itself; its power is the power
// of `p` with respect to `c` (negative when `p` is inside).
InversionMap fixing_inversion(const Circle& c, Vec2 p, const Tolerance& tol);

}  // namespace apollonius

#endif  // APOLLONIUS_INVERSION_H_
