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

#include "apollonius/elimination.h"

#include <algorithm>
#include <cmath>

namespace apollonius::elimination {
namespace {

// Relative thresholds for the case split. Inputs are pre-scaled to unit size
// by the caller, so these compare against O(1) magnitudes.
constexpr double kZeroRel = 1e-12;
constexpr double kRankRel = 1e-10;
constexpr double kDoubleRootRel = 1e-11;
// Roots farther out than this (in unit-scaled coordinates) are line-like and
// left to the tangent-line routine.
constexpr double kMaxRadius = 1e9;

double max_abs(std::initializer_list<double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

// Linear row a x + b y + c r + d = 0.
struct Row {
  double a, b, c, d;
  double xy_norm() const { return std::hypot(a, b); }
  double scale() const { return max_abs({a, b, c, d}); }
};

Row as_row(const TangencyEquation& e) { return {e.a, e.b, e.c, e.d}; }

void push_root(Roots& out, double x, double y, double r) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(r)) return;
  if (std::abs(r) > kMaxRadius) return;
  out.xyr.push_back({x, y, r});
}

// Intersections of the line dot(n, p) = rhs with the circle |p - m|^2 = rho2.
std::vector<Vec2> line_circle(Vec2 n, double rhs, Vec2 m, double rho2) {
  const double nn = n.norm();
  const Vec2 u = n / nn;
  const double sd = (dot(n, m) - rhs) / nn;
  const Vec2 foot = m - u * sd;
  const double h2 = rho2 - sd * sd;
  const double scale = std::max({rho2, sd * sd, 1e-300});
  if (h2 < 0.0) {
    if (-h2 <= kDoubleRootRel * scale) return {foot};
    return {};
  }
  if (h2 == 0.0) return {foot};
  const double h = std::sqrt(h2);
  return {foot + u.perp() * h, foot - u.perp() * h};
}

// The quadratic base equation with r fixed is a circle in the (x, y) plane:
// |p - m|^2 = rho2.
void base_circle_at(const TangencyEquation& base, double r, Vec2* m,
                    double* rho2) {
  *m = Vec2{-base.a / 2.0, -base.b / 2.0};
  *rho2 = m->norm2() + r * r - base.c * r - base.d;
}

Roots solve_all_linear(const std::array<TangencyEquation, 3>& eqs) {
  Roots out;
  out.branch = Branch::kAllLinear;
  // Gaussian elimination with partial pivoting on the augmented system.
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    const double s = std::max(as_row(eqs[i]).scale(), 1e-300);
    m[i][0] = eqs[i].a / s;
    m[i][1] = eqs[i].b / s;
    m[i][2] = eqs[i].c / s;
    m[i][3] = -eqs[i].d / s;
  }
  int rank = 0;
  int pivot_col[3] = {-1, -1, -1};
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int best = rank;
    for (int i = rank + 1; i < 3; ++i) {
      if (std::abs(m[i][col]) > std::abs(m[best][col])) best = i;
    }
    if (std::abs(m[best][col]) <= kRankRel) continue;
    std::swap(m[best], m[rank]);
    for (int i = 0; i < 3; ++i) {
      if (i == rank) continue;
      const double f = m[i][col] / m[rank][col];
      for (int k = col; k < 4; ++k) m[i][k] -= f * m[rank][k];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int i = rank; i < 3; ++i) {
    if (std::abs(m[i][3]) > kRankRel) return out;  // inconsistent
  }
  if (rank < 3) {
    out.infinite = true;
    return out;
  }
  double z[3];
  for (int i = 0; i < 3; ++i) z[pivot_col[i]] = m[i][3] / m[i][pivot_col[i]];
  push_root(out, z[0], z[1], z[2]);
  return out;
}

}  // namespace

double TangencyEquation::eval(double x, double y, double r) const {
  const double q = quadratic ? x * x + y * y - r * r : 0.0;
  return q + a * x + b * y + c * r + d;
}

TangencyEquation TangencyEquation::minus(const TangencyEquation& base) const {
  if (!quadratic) return *this;
  return {false, a - base.a, b - base.b, c - base.c, d - base.d};
}

TangencyEquation equation_for(const GeneralizedCircle& obj, int sign) {
  switch (obj.kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = obj.as_circle();
      const double sr = sign * c.radius;
      return {true, -2.0 * c.center.x, -2.0 * c.center.y, -2.0 * sr,
              c.center.norm2() - c.radius * c.radius};
    }
    case ObjectKind::kPoint: {
      const Vec2 p = obj.as_point().at;
      return {true, -2.0 * p.x, -2.0 * p.y, 0.0, p.norm2()};
    }
    case ObjectKind::kLine: {
      const Line& l = obj.as_line();
      return {false, l.normal.x, l.normal.y, -static_cast<double>(sign),
              -l.offset};
    }
    case ObjectKind::kInfinity:
      break;
  }
  throw GeometryError(ErrorCode::kInvalidParams,
                      "the point at infinity has no tangency equation");
}

std::vector<double> quadratic_roots(double a, double b, double c,
                                    bool* infinite) {
  *infinite = false;
  const double m = max_abs({a, b, c});
  if (m == 0.0) {
    *infinite = true;
    return {};
  }
  a /= m;
  b /= m;
  c /= m;
  if (std::abs(a) <= 1e-14) {
    if (std::abs(b) <= kZeroRel) {
      if (std::abs(c) <= kZeroRel) *infinite = true;
      return {};
    }
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  const double disc_scale = b * b + 4.0 * std::abs(a * c);
  // A slightly negative discriminant is a rounded double root. Close real
  // roots are both returned; the caller merges them when their midpoint is
  // itself a root within tolerance.
  if (disc < 0.0) {
    if (-disc <= kDoubleRootRel * disc_scale) return {-b / (2.0 * a)};
    return {};
  }
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) return {0.0};
  return {q / a, c / q};
}

Roots eliminate(const std::array<TangencyEquation, 3>& eqs) {
  int base_index = -1;
  for (int i = 0; i < 3; ++i) {
    if (eqs[i].quadratic) {
      base_index = i;
      break;
    }
  }
  if (base_index < 0) return solve_all_linear(eqs);

  const TangencyEquation& base = eqs[base_index];
  Row rows[2];
  int n_rows = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == base_index) continue;
    rows[n_rows++] = as_row(eqs[i].minus(base));
  }

  Roots out;
  const double n0 = rows[0].xy_norm();
  const double n1 = rows[1].xy_norm();
  const bool zero0 = n0 <= kZeroRel * std::max(rows[0].scale(), 1e-300);
  const bool zero1 = n1 <= kZeroRel * std::max(rows[1].scale(), 1e-300);
  const double det = rows[0].a * rows[1].b - rows[1].a * rows[0].b;

  if (!zero0 && !zero1 && std::abs(det) > kRankRel * n0 * n1) {
    // Rows independent: (x, y) = u r + v, then a quadratic in r.
    out.branch = Branch::kIndependentRows;
    auto solve2 = [&](double e0, double e1) {
      return Vec2{(e0 * rows[1].b - e1 * rows[0].b) / det,
                  (rows[0].a * e1 - rows[1].a * e0) / det};
    };
    const Vec2 u = solve2(-rows[0].c, -rows[1].c);
    const Vec2 v = solve2(-rows[0].d, -rows[1].d);
    const Vec2 ab{base.a, base.b};
    const double qa = u.norm2() - 1.0;
    const double qb = 2.0 * dot(u, v) + dot(ab, u) + base.c;
    const double qc = v.norm2() + dot(ab, v) + base.d;
    bool infinite = false;
    for (double r : quadratic_roots(qa, qb, qc, &infinite)) {
      const Vec2 p = u * r + v;
      push_root(out, p.x, p.y, r);
    }
    out.infinite = infinite;
    return out;
  }

  // Proportional (x, y) coefficients: combine the rows into an equation in r
  // alone, cr * r + dr = 0.
  double cr = 0.0;
  double dr = 0.0;
  double r_scale = 0.0;
  int pivot = -1;
  if (zero0 && zero1) {
    // Both rows are already free of x and y.
    std::vector<double> fixed;
    for (const Row& row : rows) {
      const double s = std::max(row.scale(), 1e-300);
      if (std::abs(row.c) <= kZeroRel * s) {
        if (std::abs(row.d) > kZeroRel * s) {
          out.branch = Branch::kProportionalNone;
          return out;
        }
        continue;
      }
      fixed.push_back(-row.d / row.c);
    }
    if (fixed.empty()) {
      out.branch = Branch::kProportionalDependent;
      out.infinite = true;
      return out;
    }
    if (fixed.size() == 2 && std::abs(fixed[0] - fixed[1]) >
                                 kRankRel * std::max({1.0, std::abs(fixed[0]),
                                                      std::abs(fixed[1])})) {
      out.branch = Branch::kProportionalNone;
      return out;
    }
    out.branch = Branch::kProportionalUniqueR;
    const double r = fixed[0];
    Vec2 m;
    double rho2;
    base_circle_at(base, r, &m, &rho2);
    const double scale = std::max({rho2, m.norm2(), 1.0});
    if (std::abs(rho2) <= kDoubleRootRel * scale) {
      push_root(out, m.x, m.y, r);
    } else if (rho2 > 0.0) {
      out.infinite = true;  // a whole circle of centers
    }
    return out;
  }

  pivot = n0 >= n1 ? 0 : 1;
  const Row& p = rows[pivot];
  const Row& q = rows[1 - pivot];
  const double np = p.xy_norm();
  const double lambda = (q.a * p.a + q.b * p.b) / (np * np);
  cr = q.c - lambda * p.c;
  dr = q.d - lambda * p.d;
  r_scale = std::max({q.scale(), std::abs(lambda) * p.scale(), 1e-300});
  const bool cr_zero = std::abs(cr) <= kZeroRel * r_scale;
  const bool dr_zero = std::abs(dr) <= kZeroRel * r_scale;

  const Vec2 n{p.a, p.b};
  if (cr_zero && !dr_zero) {
    out.branch = Branch::kProportionalNone;
    return out;
  }
  if (!cr_zero) {
    // Unique r; the pivot row is a line in the plane, the base equation a
    // circle. Their intersection gives at most two centers.
    out.branch = Branch::kProportionalUniqueR;
    const double r = -dr / cr;
    Vec2 m;
    double rho2;
    base_circle_at(base, r, &m, &rho2);
    for (const Vec2& at : line_circle(n, -p.c * r - p.d, m, rho2)) {
      push_root(out, at.x, at.y, r);
    }
    return out;
  }

  // Dependent rows: (x, y) = g r + h + t e along the pivot line, and the base
  // equation becomes (t + k/2)^2 = H(r) with H quadratic.
  out.branch = Branch::kProportionalDependent;
  const Vec2 e = n.perp() / np;
  const Vec2 g = n * (-p.c / (np * np));
  const Vec2 h = n * (-p.d / (np * np));
  const Vec2 ab{base.a, base.b};
  const double k = dot(ab, e);
  const double hp = 1.0 - g.norm2();
  const double hq = -(2.0 * dot(g, h) + dot(ab, g) + base.c);
  const double hs = k * k / 4.0 - (h.norm2() + dot(ab, h) + base.d);
  const double hscale = std::max(max_abs({hp, hq, hs}), 1e-300);
  const bool p_zero = std::abs(hp) <= kZeroRel * hscale;
  const bool q_zero = std::abs(hq) <= kZeroRel * hscale;
  if (p_zero && q_zero) {
    if (hs < -kZeroRel * hscale) return out;
    out.infinite = true;
    return out;
  }
  if (hp > 0.0 || p_zero) {
    // H takes positive values on an unbounded interval.
    out.infinite = true;
    return out;
  }
  const double r0 = -hq / (2.0 * hp);
  const double hmax = hs - hq * hq / (4.0 * hp);
  const double mscale =
      std::max({std::abs(hs), hq * hq / (4.0 * std::abs(hp)), 1e-300});
  if (std::abs(hmax) <= kDoubleRootRel * mscale) {
    const Vec2 at = g * r0 + h + e * (-k / 2.0);
    push_root(out, at.x, at.y, r0);
    return out;
  }
  if (hmax > 0.0) out.infinite = true;
  return out;
}

std::array<double, 3> polish(const std::array<TangencyEquation, 3>& eqs,
                             std::array<double, 3> root) {
  auto residual = [&](const std::array<double, 3>& z) {
    double s = 0.0;
    for (const auto& e : eqs) {
      const double f = e.eval(z[0], z[1], z[2]);
      s += f * f;
    }
    return s;
  };
  double current = residual(root);
  for (int iter = 0; iter < 8 && current > 0.0; ++iter) {
    double j[3][3];
    double f[3];
    for (int i = 0; i < 3; ++i) {
      const auto& e = eqs[i];
      const double qf = e.quadratic ? 2.0 : 0.0;
      j[i][0] = qf * root[0] + e.a;
      j[i][1] = qf * root[1] + e.b;
      j[i][2] = -qf * root[2] + e.c;
      f[i] = -e.eval(root[0], root[1], root[2]);
    }
    const double det = j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                       j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                       j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    double row_product = 1.0;
    for (int i = 0; i < 3; ++i) {
      row_product *= std::max(std::hypot(j[i][0], j[i][1], j[i][2]), 1e-300);
    }
    // Near a double root the Jacobian is singular; leave the root alone.
    if (std::abs(det) <= 1e-8 * row_product) break;
    std::array<double, 3> step;
    for (int col = 0; col < 3; ++col) {
      double m[3][3];
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) m[r][c] = (c == col) ? f[r] : j[r][c];
      }
      step[col] = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) /
                  det;
    }
    const std::array<double, 3> next{root[0] + step[0], root[1] + step[1],
                                     root[2] + step[2]};
    const double next_residual = residual(next);
    if (!(next_residual < current)) break;
    root = next;
    current = next_residual;
  }
  return root;
}

}  // namespace apollonius::elimination
