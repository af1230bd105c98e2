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

// Algebraic core of the solver. Kept out of solver.h so that the numerical
// oracle in verify.h cannot reach it.

#ifndef APOLLONIUS_ELIMINATION_H_
#define APOLLONIUS_ELIMINATION_H_

#include <array>
#include <vector>

#include "apollonius/geometry.h"

namespace apollonius::elimination {

// quadratic * (x^2 + y^2 - r^2) + a x + b y + c r + d = 0
struct TangencyEquation {
  bool quadratic = false;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double eval(double x, double y, double r) const;
  // Difference of two quadratic equations, or a linear equation as-is.
  TangencyEquation minus(const TangencyEquation& base) const;
};

// Equation of tangency with `obj` (circle, line or point) under `sign`.
TangencyEquation equation_for(const GeneralizedCircle& obj, int sign);

// Which branch of the case analysis produced the roots.
enum class Branch {
  kIndependentRows,   // x, y solved linearly in r, quadratic in r
  kProportionalNone,  // linear equation in r has no solution
  kProportionalUniqueR,
  kProportionalDependent,
  kAllLinear,  // no quadratic equation in the triple
};

struct Roots {
  std::vector<std::array<double, 3>> xyr;
  bool infinite = false;
  Branch branch = Branch::kIndependentRows;
};

// Real roots (x, y, r) of three tangency equations. Reports `infinite` when
// the solution set is a continuum.
Roots eliminate(const std::array<TangencyEquation, 3>& eqs);

// Newton refinement of a root against the three equations.
std::array<double, 3> polish(const std::array<TangencyEquation, 3>& eqs,
                             std::array<double, 3> root);

// Real roots of a r^2 + b r + c with the near-double-root merge used by the
// solver. Sets `infinite` when all coefficients vanish.
std::vector<double> quadratic_roots(double a, double b, double c,
                                    bool* infinite);

}  // namespace apollonius::elimination

#endif  // APOLLONIUS_ELIMINATION_H_
