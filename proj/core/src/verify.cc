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

// The oracle deliberately avoids apollonius/elimination.h.

#include "apollonius/verify.h"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "apollonius/classify.h"
#include "apollonius/error.h"
#include "apollonius/inversion.h"

namespace apollonius {
namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return uniform_from_bits(engine_(), lo, hi);
  }
  bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }
  int index(int n) {
    return std::min(n - 1, static_cast<int>(uniform(0.0, n)));
  }

 private:
  std::mt19937_64 engine_;
};

using GC = GeneralizedCircle;

// ---------------------------------------------------------------------------
// Oracle.

// Similarity frame: p -> (p - shift) / scale.
struct Frame {
  Vec2 shift;
  double scale = 1.0;

  GC to_local(const GC& g) const {
    switch (g.kind()) {
      case ObjectKind::kCircle: {
        const Circle& c = g.as_circle();
        return GC::circle((c.center - shift) / scale, c.radius / scale);
      }
      case ObjectKind::kLine: {
        const Line& l = g.as_line();
        return GC::line(l.normal, (l.offset - dot(l.normal, shift)) / scale);
      }
      case ObjectKind::kPoint:
        return GC::point((g.as_point().at - shift) / scale);
      case ObjectKind::kInfinity:
        return g;
    }
    return g;
  }

  GC to_world(const GC& g) const {
    switch (g.kind()) {
      case ObjectKind::kCircle: {
        const Circle& c = g.as_circle();
        return GC::circle(c.center * scale + shift, c.radius * scale);
      }
      case ObjectKind::kLine: {
        const Line& l = g.as_line();
        return GC::line(l.normal, l.offset * scale + dot(l.normal, shift));
      }
      case ObjectKind::kPoint:
        return GC::point(g.as_point().at * scale + shift);
      case ObjectKind::kInfinity:
        return g;
    }
    return g;
  }
};

Frame frame_for(std::span<const GC> objects) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto grow = [&](Vec2 p, double r) {
    lo_x = std::min(lo_x, p.x - r);
    hi_x = std::max(hi_x, p.x + r);
    lo_y = std::min(lo_y, p.y - r);
    hi_y = std::max(hi_y, p.y + r);
  };
  for (const auto& g : objects) {
    if (g.is_circle()) grow(g.as_circle().center, g.as_circle().radius);
    if (g.is_line()) grow(g.as_line().normal * g.as_line().offset, 0.0);
    if (g.is_point()) grow(g.as_point().at, 0.0);
  }
  Frame f;
  if (!(lo_x <= hi_x)) return f;
  f.shift = {(lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0};
  f.scale = std::max(std::hypot(hi_x - lo_x, hi_y - lo_y), 1e-3);
  return f;
}

// Cycle coordinates: v = (a, b, c, d) for a (x^2 + y^2) + b x + c y + d = 0,
// with the form <v, w> = b b' + c c' - 2 (a d' + d a'). A circle or line is
// scaled to <v, v> = 1; two such cycles are tangent iff <v, w>^2 = 1. Points
// (and infinity) have <w, w> = 0 and lie on v iff <v, w> = 0. Lines are a = 0,
// so huge circles and lines sit next to each other.
using Cycle = Eigen::Vector4d;

double form(const Cycle& v, const Cycle& w) {
  return v[1] * w[1] + v[2] * w[2] - 2.0 * (v[0] * w[3] + v[3] * w[0]);
}

Cycle cycle_of(const GC& g) {
  switch (g.kind()) {
    case ObjectKind::kCircle: {
      const Circle& c = g.as_circle();
      const Vec2 m = c.center;
      return Cycle(1.0, -2.0 * m.x, -2.0 * m.y,
                   m.norm2() - c.radius * c.radius) /
             (2.0 * c.radius);
    }
    case ObjectKind::kLine: {
      const Line& l = g.as_line();
      return Cycle(0.0, l.normal.x, l.normal.y, -l.offset);
    }
    case ObjectKind::kPoint: {
      const Vec2 m = g.as_point().at;
      const Cycle v(1.0, -2.0 * m.x, -2.0 * m.y, m.norm2());
      return v / v.norm();
    }
    case ObjectKind::kInfinity:
      return Cycle(0.0, 0.0, 0.0, 1.0);
  }
  return Cycle::Zero();
}

bool is_null(const GC& g) { return g.is_point() || g.is_infinity(); }

// Residuals <v, v> - 1 and, per input, <v, w> - sign (sign 0 for points).
// Fixing the signs picks an orientation class and makes the input
// conditions linear.
void cycle_residuals(const Cycle& v, std::span<const Cycle> inputs,
                     std::span<const int> signs, Eigen::VectorXd& res,
                     Eigen::MatrixXd& jac) {
  const int n = static_cast<int>(inputs.size());
  res.resize(n + 1);
  jac.resize(n + 1, 4);
  res[0] = form(v, v) - 1.0;
  jac.row(0) << -4.0 * v[3], 2.0 * v[1], 2.0 * v[2], -4.0 * v[0];
  for (int i = 0; i < n; ++i) {
    const Cycle& w = inputs[i];
    res[i + 1] = form(v, w) - signs[i];
    jac.row(i + 1) << -2.0 * w[3], w[1], w[2], -2.0 * w[0];
  }
}

double worst_residual(const Cycle& v, std::span<const Cycle> inputs,
                      std::span<const int> signs) {
  Eigen::VectorXd res;
  Eigen::MatrixXd jac;
  cycle_residuals(v, inputs, signs, res, jac);
  return res.cwiseAbs().maxCoeff();
}

// Circle or line for a cycle with <v, v> = 1.
GC object_of(const Cycle& v) {
  const double h = std::hypot(v[1], v[2]);
  if (std::abs(v[0]) <= 1e-10 * std::max(h, 1.0)) {
    return GC::line(Vec2{v[1], v[2]} / h, -v[3] / h);
  }
  const Vec2 center{-v[1] / (2.0 * v[0]), -v[2] / (2.0 * v[0])};
  return GC::circle(center, 1.0 / (2.0 * std::abs(v[0])));
}

// Levenberg-Marquardt with Marquardt scaling; returns the final parameters.
template <int N>
Eigen::Matrix<double, N, 1> levenberg_marquardt(
    Eigen::Matrix<double, N, 1> p,
    const std::function<void(const Eigen::Matrix<double, N, 1>&,
                             Eigen::VectorXd&, Eigen::MatrixXd&)>& eval) {
  Eigen::VectorXd res;
  Eigen::MatrixXd jac;
  eval(p, res, jac);
  double cost = res.squaredNorm();
  double lambda = 1e-3;
  for (int iter = 0; iter < 200 && cost > 1e-32; ++iter) {
    const Eigen::Matrix<double, N, N> jtj = jac.transpose() * jac;
    const Eigen::Matrix<double, N, 1> g = jac.transpose() * res;
    Eigen::Matrix<double, N, N> a = jtj;
    for (int k = 0; k < N; ++k) a(k, k) += lambda * (jtj(k, k) + 1e-12);
    const Eigen::Matrix<double, N, 1> step = a.ldlt().solve(-g);
    if (!step.allFinite()) break;
    const Eigen::Matrix<double, N, 1> trial = p + step;
    Eigen::VectorXd tres;
    Eigen::MatrixXd tjac;
    eval(trial, tres, tjac);
    const double tcost = tres.squaredNorm();
    if (std::isfinite(tcost) && tcost < cost) {
      p = trial;
      res = std::move(tres);
      jac = std::move(tjac);
      const double gain = cost - tcost;
      cost = tcost;
      lambda = std::max(lambda / 3.0, 1e-15);
      if (step.norm() <= 1e-15 * (1.0 + p.norm()) || gain <= 1e-34) break;
    } else {
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
  }
  return p;
}

void push_unique(std::vector<GC>& out, const GC& g, double radius) {
  for (const auto& o : out) {
    if (approx_equal(o, g, radius)) return;
  }
  out.push_back(g);
}

// Hits spread along a flat valley of a multiple root: two cycles are one
// when their normalized midpoint is itself a root within `eps`.
void add_cycle(std::vector<Cycle>& found, const Cycle& v,
               std::span<const Cycle> inputs, std::span<const int> signs,
               double cluster, double eps) {
  for (Cycle& f : found) {
    if ((f - v).norm() <= cluster) return;
    const Cycle mid = (f + v) * 0.5;
    const double q = form(mid, mid);
    if (q <= 0.0 || (f - v).norm() > 1e-2) continue;
    const Cycle unit = mid / std::sqrt(q);
    if (worst_residual(unit, inputs, signs) <= eps) {
      f = unit;
      return;
    }
  }
  found.push_back(v);
}

}  // namespace

SolutionSet oracle_solve(std::span<const GC> raw, const OracleConfig& cfg,
                         const Tolerance& tol) {
  if (raw.size() < 3) {
    throw GeometryError(ErrorCode::kTooFewObjects, "need three objects");
  }
  std::vector<GC> objects;
  for (const auto& g : raw) {
    objects.push_back(g.is_infinity() ? g : normalize(g, tol));
  }
  SolutionSet out;
  const DegeneracyReport deg = is_degenerate(objects, tol);
  if (deg.degenerate) {
    out.infinite = true;
    out.witness = deg.witness;
    return out;
  }

  const Frame frame = frame_for(objects);
  std::vector<GC> local;
  for (const auto& g : objects) local.push_back(frame.to_local(g));
  const bool has_infinity = std::any_of(
      local.begin(), local.end(), [](const GC& g) { return g.is_infinity(); });
  const bool all_lines = std::all_of(local.begin(), local.end(),
                                     [](const GC& g) { return g.is_line(); });

  Rng rng(cfg.seed);
  std::vector<GC> found;
  const double cluster = cfg.cluster_radius;

  // Lines parallel to an input line touch it at infinity, a double root of
  // the cycle equations that the search below only reaches to sqrt(residual).
  // On that stratum v = (0, n, d) and every other condition is linear in d.
  for (const GC& base : local) {
    if (!base.is_line()) continue;
    const Vec2 n = base.as_line().normal;
    for (const GC& g : local) {
      if (g.is_line() || g.is_infinity()) continue;
      const Cycle w = cycle_of(g);
      for (const int sigma :
           g.is_point() ? std::vector<int>{0} : std::vector<int>{1, -1}) {
        const double d = (n.x * w[1] + n.y * w[2] - sigma) / (2.0 * w[0]);
        const Cycle v(0.0, n.x, n.y, d);
        const bool on_all =
            std::all_of(local.begin(), local.end(), [&](const GC& h) {
              const double p = form(v, cycle_of(h));
              return is_null(h)
                         ? std::abs(p) <= cfg.residual_tol
                         : std::abs(std::abs(p) - 1.0) <= cfg.residual_tol;
            });
        if (on_all) push_unique(found, object_of(v), cluster);
      }
    }
  }

  {
    std::vector<Cycle> targets;
    std::vector<int> free;  // inputs whose sign is free: circles and lines
    for (std::size_t i = 0; i < local.size(); ++i) {
      targets.push_back(cycle_of(local[i]));
      if (!is_null(local[i])) free.push_back(static_cast<int>(i));
    }
    // v and -v are the same object with every sign flipped, so the first
    // free sign is fixed.
    const int classes = free.empty() ? 1 : 1 << (free.size() - 1);
    const int per_class = std::max(16, cfg.starts / classes);
    std::vector<int> signs(local.size(), 0);
    std::vector<Cycle> cycles;
    for (int cls = 0; cls < classes; ++cls) {
      for (std::size_t k = 0; k < free.size(); ++k) {
        signs[free[k]] = k > 0 && (cls >> (k - 1)) & 1 ? -1 : 1;
      }
      const auto eval = [&](const Cycle& v, Eigen::VectorXd& r,
                            Eigen::MatrixXd& j) {
        cycle_residuals(v, targets, signs, r, j);
      };
      std::vector<Cycle> in_class;
      for (int s = 0; s < per_class; ++s) {
        // Mostly circles near the configuration; every eighth start a far
        // circle (radius up to 1e5 frame units) and every eighth a line.
        GC start = GC::line(Vec2{1.0, 0.0}, 0.0);
        const double t = rng.uniform(0.0, 2.0 * kPi);
        if (s % 8 == 7) {
          start =
              GC::line(Vec2{std::cos(t), std::sin(t)}, rng.uniform(-2.0, 2.0));
        } else if (s % 8 == 3) {
          const double r0 = std::exp(rng.uniform(std::log(2.0), std::log(1e5)));
          const double d0 = r0 + rng.uniform(-1.0, 1.0);
          start = GC::circle(Vec2{d0 * std::cos(t), d0 * std::sin(t)}, r0);
        } else {
          start =
              GC::circle(Vec2{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)},
                         std::exp(rng.uniform(std::log(1e-3), std::log(10.0))));
        }
        Cycle v0 = cycle_of(start);
        if (rng.coin()) v0 = -v0;
        const Cycle v = levenberg_marquardt<4>(v0, eval);
        if (!v.allFinite() || form(v, v) <= 0.0) continue;
        const Cycle unit = v / std::sqrt(form(v, v));
        if (worst_residual(unit, targets, signs) > cfg.residual_tol) continue;
        add_cycle(in_class, unit, targets, signs, cluster, tol.length_eps);
      }
      cycles.insert(cycles.end(), in_class.begin(), in_class.end());
    }
    for (const Cycle& v : cycles) push_unique(found, object_of(v), cluster);
  }

  // Common points.
  if (!has_infinity) {
    const Tolerance ltol{tol.length_eps, 1.0};
    std::vector<GC> candidates;
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (local[i].is_point()) candidates.push_back(local[i]);
      for (std::size_t j = i + 1; j < local.size(); ++j) {
        for (const auto& q : intersection_points(local[i], local[j], ltol)) {
          candidates.push_back(q);
        }
      }
    }
    for (const auto& q : candidates) {
      if (!q.is_point()) continue;
      const bool on_all =
          std::all_of(local.begin(), local.end(), [&](const GC& g) {
            return g.is_point() ? approx_equal(g, q, ltol.eps())
                                : lies_on(q, g, ltol);
          });
      if (on_all) push_unique(found, q, cluster);
    }
    if (all_lines) found.push_back(GC::infinity());
  }

  for (const auto& f : found) {
    const bool is_input =
        std::any_of(local.begin(), local.end(), [&](const GC& g) {
          return g.kind() == f.kind() &&
                 approx_equal(g, f, 10.0 * tol.length_eps);
        });
    if (is_input) continue;
    const GC world = frame.to_world(f);
    const Tolerance wtol = tol.widened_for(world);
    Solution sol;
    sol.object = world;
    bool ok = true;
    for (const auto& in : objects) {
      const TangencyKind k = tangency(world, in, wtol);
      ok = ok && is_tangent(k);
      sol.kinds.push_back(k);
    }
    if (ok) out.solutions.push_back(std::move(sol));
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const Solution& a, const Solution& b) {
              return canonical_less(a.object, b.object);
            });
  return out;
}

// ---------------------------------------------------------------------------
// Sampling.

std::string to_string(SamplerProfile p) {
  switch (p) {
    case SamplerProfile::kGeneric:
      return "generic";
    case SamplerProfile::kNearTangent:
      return "near-tangent";
    case SamplerProfile::kMixedLines:
      return "mixed-lines";
    case SamplerProfile::kAnnulus:
      return "annulus";
  }
  return "unknown";
}

std::optional<SamplerProfile> parse_profile(const std::string& name) {
  for (SamplerProfile p : kAllProfiles) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (index * 0xD1B54A32D192ED03ull);
  splitmix64(state);
  return splitmix64(state);
}

double uniform_from_bits(std::uint64_t bits, double lo, double hi) {
  const double v =
      lo + (hi - lo) * (static_cast<double>(bits >> 11) * 0x1.0p-53);
  return v < hi ? v : std::nextafter(hi, lo);  // rounding can reach hi
}

namespace {

GC random_circle(Rng& rng) {
  return GC::circle(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                    rng.uniform(0.2, 3.0));
}

GC random_line(Rng& rng) {
  const double t = rng.uniform(0.0, kPi);
  return GC::line({std::cos(t), std::sin(t)}, rng.uniform(-4.0, 4.0));
}

std::vector<GC> draw(int count, SamplerProfile profile, Rng& rng) {
  std::vector<GC> out;
  switch (profile) {
    case SamplerProfile::kGeneric:
      for (int i = 0; i < count; ++i) out.push_back(random_circle(rng));
      break;
    case SamplerProfile::kMixedLines:
      for (int i = 0; i < count; ++i) {
        out.push_back(rng.coin(0.4) ? random_line(rng) : random_circle(rng));
      }
      break;
    case SamplerProfile::kNearTangent: {
      // Each new circle touches an earlier one up to a jitter of 10 eps.
      const double jitter = 10.0 * 1e-9 * 10.0;
      out.push_back(random_circle(rng));
      while (static_cast<int>(out.size()) < count) {
        if (!rng.coin(0.7)) {
          out.push_back(random_circle(rng));
          continue;
        }
        const Circle& t =
            out[rng.index(static_cast<int>(out.size()))].as_circle();
        const Vec2 c{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        const double d = distance(c, t.center);
        const double r = d > t.radius ? d - t.radius : t.radius - d;
        if (r < 0.1) continue;
        out.push_back(GC::circle(c, r + rng.uniform(-jitter, jitter)));
      }
      break;
    }
    case SamplerProfile::kAnnulus: {
      const double big = rng.uniform(2.0, 6.0);
      out.push_back(GC::circle(0.0, 0.0, 1.0));
      out.push_back(GC::circle(0.0, 0.0, big));
      while (static_cast<int>(out.size()) < count) {
        if (!rng.coin(0.7)) {
          out.push_back(random_circle(rng));
          continue;
        }
        const double t = rng.uniform(0.0, 2.0 * kPi);
        const bool type_b = rng.coin();
        const double r = type_b ? (big + 1.0) / 2.0 : (big - 1.0) / 2.0;
        const double d = type_b ? (big - 1.0) / 2.0 : (big + 1.0) / 2.0;
        out.push_back(GC::circle(d * std::cos(t), d * std::sin(t), r));
      }
      out.resize(count);
      break;
    }
  }
  return out;
}

bool acceptable(const std::vector<GC>& objs) {
  const auto tol = Tolerance::for_objects(objs);
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      if (approx_equal(objs[i], objs[j], 1e-6 * tol.relative_scale))
        return false;
    }
  }
  return !is_degenerate(objs, tol).degenerate;
}

std::vector<GC> sample_counted(int count, SamplerProfile profile,
                               std::uint64_t seed, int* rejected) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(trial_seed(seed, attempt));
    auto objs = draw(count, profile, rng);
    if (acceptable(objs)) return objs;
    if (rejected) ++*rejected;
  }
}

struct Similarity {
  double cs = 1.0;
  double sn = 0.0;
  bool flip = false;
  double k = 1.0;
  Vec2 t;

  Vec2 rotate(Vec2 v) const {
    if (flip) v.y = -v.y;
    return {cs * v.x - sn * v.y, sn * v.x + cs * v.y};
  }
  Vec2 apply(Vec2 p) const { return rotate(p) * k + t; }

  GC apply(const GC& g) const {
    switch (g.kind()) {
      case ObjectKind::kCircle:
        return GC::circle(apply(g.as_circle().center),
                          g.as_circle().radius * k);
      case ObjectKind::kLine: {
        const Line& l = g.as_line();
        const Vec2 n = rotate(l.normal);
        return GC::line(n, dot(n, apply(l.normal * l.offset)));
      }
      case ObjectKind::kPoint:
        return GC::point(apply(g.as_point().at));
      case ObjectKind::kInfinity:
        return g;
    }
    return g;
  }

  static Similarity random(Rng& rng) {
    Similarity s;
    const double a = rng.uniform(0.0, 2.0 * kPi);
    s.cs = std::cos(a);
    s.sn = std::sin(a);
    s.flip = rng.coin();
    s.k = std::exp(rng.uniform(-2.0, 2.0));
    s.t = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    return s;
  }
};

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

std::vector<GC> sample_configuration(int count, SamplerProfile profile,
                                     std::uint64_t seed) {
  return sample_counted(count, profile, seed, nullptr);
}

namespace {

template <typename Match>
bool same_sets_by(const SolutionSet& a, const SolutionSet& b, Match match) {
  if (a.infinite != b.infinite) return false;
  if (a.infinite) return true;
  if (a.size() != b.size()) return false;
  auto covered = [&](const SolutionSet& x, const SolutionSet& y) {
    return std::all_of(
        x.solutions.begin(), x.solutions.end(), [&](const Solution& s) {
          return std::any_of(y.solutions.begin(), y.solutions.end(),
                             [&](const Solution& t) {
                               return s.object.kind() == t.object.kind() &&
                                      match(s.object, t.object);
                             });
        });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace

bool same_solution_sets(const SolutionSet& a, const SolutionSet& b,
                        double radius) {
  return same_sets_by(a, b, [radius](const GC& s, const GC& t) {
    return approx_equal(s, t, radius);
  });
}

// ---------------------------------------------------------------------------
// Checks.

VerificationReport check_theorem(int num_inputs, int trials, std::uint64_t seed,
                                 std::optional<SamplerProfile> profile) {
  if (num_inputs < 3 || num_inputs > 5 || trials < 1) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "check_theorem needs 3..5 inputs and trials >= 1");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = num_inputs == 3   ? "triples"
               : num_inputs == 4 ? "quadruples"
                                 : "quintuples";
  rep.bound = num_inputs == 3 ? 8 : num_inputs == 4 ? 6 : 4;
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    const SamplerProfile p = profile ? *profile : kAllProfiles[i % 4];
    const auto objs = sample_counted(num_inputs, p, s, &rep.rejected);
    ++rep.trials;
    try {
      const SolutionSet set = solve(objs, Tolerance::for_objects(objs));
      const int count = static_cast<int>(set.size());
      rep.max_count_observed = std::max(rep.max_count_observed, count);
      if (set.infinite || count > rep.bound) {
        rep.violations.push_back(
            {s,
             objs,
             {count},
             set.infinite ? "infinite solution family" : "count above bound"});
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(
          {s, objs, {}, std::string("solver threw: ") + e.what()});
    }
  }
  rep.wall_time_seconds = elapsed(start);
  return rep;
}

namespace {

struct IRep {
  int row;
  GC alpha;
  std::array<int, 4> sectors;
  ObjectKind extra;  // kCircle stands for "no extra point"
  int extra_count;
  int total;
  const char* label;
};

struct TRep {
  int row;
  GC alpha;
  int circles;
  int lines;
  bool infinite;
  int total;
  const char* label;
};

std::vector<IRep> i_rows() {
  const double s2 = std::numbers::sqrt2;
  using K = ObjectKind;
  return {
      {1, GC::circle(0, 0, 1), {2, 2, 2, 2}, K::kCircle, 0, 8, "III"},
      {2, GC::circle(1, 1, 1.2), {4, 2, 0, 2}, K::kCircle, 0, 8, "III"},
      {3, GC::circle(3, 0.5, 1), {2, 2, 0, 0}, K::kCircle, 0, 4, "II"},
      {4, GC::circle(3, 3, 1), {4, 0, 0, 0}, K::kCircle, 0, 4, "I"},
      {5, GC::circle(1, 1, s2), {2, 1, 0, 1}, K::kPoint, 1, 5, "[III]"},
      {5, GC::line({1, 1}, 1), {2, 1, 0, 1}, K::kInfinity, 1, 5, "[III]"},
      {6, GC::line({-2, 1}, 0), {0, 0, 0, 0}, K::kPoint, 2, 2, "[III]"},
      {7, GC::circle(2, 0.5, 2), {3, 1, 0, 2}, K::kCircle, 0, 6, "IIT"},
      {8, GC::circle(3, 1, 1), {3, 1, 0, 0}, K::kCircle, 0, 4, "IT"},
      {9, GC::circle(1, 1, 1), {2, 1, 0, 1}, K::kCircle, 0, 4, "ITT"},
      {10, GC::circle(1, 0, 1), {1, 0, 0, 1}, K::kPoint, 1, 3, "[IIT]"},
      {10, GC::line({1, 0}, 1), {1, 0, 0, 1}, K::kInfinity, 1, 3, "[IIT]"},
  };
}

std::vector<TRep> t_rows() {
  return {
      {1, GC::circle(0, 1, 0.5), 4, 2, false, 6, "T"},
      {2, GC::circle(0, 1, 1.5), 4, 2, false, 6, "IIT"},
      {3, GC::circle(0, 0.5, 1), 2, 2, false, 4, "IT"},
      {4, GC::line({1, 0}, 0), 2, 0, false, 2, "[IIT]"},
      {5, GC::circle(0, 0.5, 0.5), 3, 1, false, 4, "TT"},
      {6, GC::circle(0, 0.5, 1.5), 3, 1, false, 4, "ITT"},
      {7, GC::circle(0, 1, 1), 2, 0, false, 2, "TTT"},
      {8, GC::circle(0, -1, 1), 1, 1, false, 2, "STT"},
      {9, GC::circle(0, -2, 1), 0, 2, false, 2, "ST"},
      {10, GC::line({0, 1}, 1), 0, 0, true, 0, "[TTT]"},
  };
}

}  // namespace

VerificationReport check_tables(int trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = "tables";
  const GC x_axis = GC::line({0, 1}, 0);
  const GC y_axis = GC::line({1, 0}, 0);
  const GC top = GC::line({0, 1}, 2);
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    Rng rng(s);
    // The first trial uses the identity so the canonical representatives
    // are always covered.
    const Similarity sim = i == 0 ? Similarity{} : Similarity::random(rng);
    for (const IRep& r : i_rows()) {
      ++rep.trials;
      const std::vector<GC> objs = {sim.apply(x_axis), sim.apply(y_axis),
                                    sim.apply(r.alpha)};
      std::ostringstream err;
      try {
        const auto tol = Tolerance::for_objects(objs);
        const auto frame =
            SectorFrame::make(objs[0].as_line(), objs[1].as_line());
        const ITypeResult res = i_type(frame, objs[2], tol);
        if (res.row != r.row)
          err << "row " << res.row << " != " << r.row << "; ";
        if (!res.distribution.isomorphic(Distribution::of_sectors(r.sectors))) {
          err << "distribution " << res.distribution.to_string() << "; ";
        }
        if (static_cast<int>(res.extra_points.size()) != r.extra_count) {
          err << "extra points " << res.extra_points.size() << "; ";
        } else if (r.extra_count == 1 &&
                   res.extra_points[0].kind() != r.extra) {
          err << "extra point kind " << to_string(res.extra_points[0].kind())
              << "; ";
        }
        if (res.total != r.total) err << "total " << res.total << "; ";
        if (res.label.to_string() != r.label)
          err << "label " << res.label.to_string() << "; ";
        rep.max_count_observed = std::max(rep.max_count_observed, res.total);
      } catch (const std::exception& e) {
        err << "threw " << e.what();
      }
      if (!err.str().empty()) {
        rep.violations.push_back(
            {s, objs, {r.row}, "I-type " + roman(r.row) + ": " + err.str()});
      }
    }
    for (const TRep& r : t_rows()) {
      ++rep.trials;
      const std::vector<GC> objs = {sim.apply(x_axis), sim.apply(top),
                                    sim.apply(r.alpha)};
      std::ostringstream err;
      try {
        const auto tol = Tolerance::for_objects(objs);
        const TTypeResult res =
            t_type(objs[0].as_line(), objs[1].as_line(), objs[2], tol);
        if (res.row != r.row)
          err << "row " << res.row << " != " << r.row << "; ";
        if (res.infinite != r.infinite) err << "infinite flag; ";
        if (!r.infinite && (res.distribution.circles != r.circles ||
                            res.distribution.lines != r.lines)) {
          err << "distribution " << res.distribution.to_string() << "; ";
        }
        if (!r.infinite && res.total != r.total)
          err << "total " << res.total << "; ";
        if (res.label.to_string() != r.label)
          err << "label " << res.label.to_string() << "; ";
        rep.max_count_observed = std::max(rep.max_count_observed, res.total);
      } catch (const std::exception& e) {
        err << "threw " << e.what();
      }
      if (!err.str().empty()) {
        rep.violations.push_back(
            {s, objs, {r.row}, "T-type " + roman(r.row) + ": " + err.str()});
      }
    }
  }
  rep.wall_time_seconds = elapsed(start);
  return rep;
}

VerificationReport check_pairing(int trials, std::uint64_t seed,
                                 int collinear_trials) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = "pairing";
  rep.bound = 2;

  auto classes = [](const std::vector<GC>& objs) {
    std::vector<std::vector<SignedSolution>> out;
    const int k = static_cast<int>(objs.size());
    const auto tol = Tolerance::for_objects(objs);
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<SignedInput> in;
      for (int i = 0; i < k; ++i) {
        const int sign = i == 0 ? 1 : ((mask >> (i - 1)) & 1 ? -1 : 1);
        in.push_back({objs[i], sign});
      }
      out.push_back(solve_signed(in, tol));
    }
    return out;
  };

  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    const auto objs =
        sample_counted(3 + i % 2, SamplerProfile::kGeneric, s, &rep.rejected);
    ++rep.trials;
    try {
      for (const auto& cls : classes(objs)) {
        const int n = static_cast<int>(cls.size());
        rep.max_count_observed = std::max(rep.max_count_observed, n);
        if (n > 2)
          rep.violations.push_back(
              {s, objs, {n}, "sign class with more than two solutions"});
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(
          {s, objs, {}, std::string("solver threw: ") + e.what()});
    }
  }

  for (int i = 0; i < collinear_trials; ++i) {
    const std::uint64_t s = trial_seed(seed ^ 0xC011EA12ull, i);
    std::vector<GC> objs;
    Similarity sim;
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng(trial_seed(s, attempt));
      sim = Similarity::random(rng);
      objs.clear();
      for (int k = 0; k < 3; ++k) {
        objs.push_back(sim.apply(
            GC::circle(rng.uniform(-5.0, 5.0), 0.0, rng.uniform(0.2, 2.0))));
      }
      if (acceptable(objs)) break;
      ++rep.rejected;
    }
    ++rep.trials;
    // Center line in world coordinates.
    const Vec2 dir = sim.rotate({1.0, 0.0});
    const Vec2 origin = sim.apply(Vec2{0.0, 0.0});
    auto mirror = [&](Vec2 p) {
      const Vec2 q = p - origin;
      return origin + dir * (2.0 * dot(q, dir)) - q;
    };
    const double scale = Tolerance::for_objects(objs).relative_scale;
    try {
      for (const auto& cls : classes(objs)) {
        const int n = static_cast<int>(cls.size());
        rep.max_count_observed = std::max(rep.max_count_observed, n);
        double defect = 0.0;
        if (n == 2) {
          defect = std::max(distance(mirror(cls[0].center), cls[1].center),
                            std::abs(std::abs(cls[0].signed_radius) -
                                     std::abs(cls[1].signed_radius)));
        } else if (n == 1) {
          defect = distance(mirror(cls[0].center), cls[0].center);
        } else if (n > 2) {
          rep.violations.push_back(
              {s, objs, {n}, "sign class with more than two solutions"});
        }
        if (defect > 1e-7 * scale) {
          std::ostringstream os;
          os << "pair not mirror symmetric, defect " << defect;
          rep.violations.push_back({s, objs, {n}, os.str()});
        }
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(
          {s, objs, {}, std::string("solver threw: ") + e.what()});
    }
  }
  rep.wall_time_seconds = elapsed(start);
  return rep;
}

VerificationReport check_oracle_agreement(int trials, std::uint64_t seed,
                                          const OracleConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = "oracle";
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    // Near-tangent draws sit within sqrt(eps) of a multiple root, where the
    // count depends on the tolerance; they are left to the other checks.
    constexpr SamplerProfile kWellConditioned[] = {SamplerProfile::kGeneric,
                                                   SamplerProfile::kMixedLines,
                                                   SamplerProfile::kAnnulus};
    const SamplerProfile p = kWellConditioned[i % 3];
    const auto objs = sample_counted(3 + (i / 3) % 2, p, s, &rep.rejected);
    ++rep.trials;
    try {
      const auto tol = Tolerance::for_objects(objs);
      const SolutionSet a = solve(objs, tol);
      OracleConfig c = cfg;
      c.seed = s;
      const SolutionSet b = oracle_solve(objs, c, tol);
      rep.max_count_observed =
          std::max(rep.max_count_observed, static_cast<int>(a.size()));
      // Circles on one flat valley of a multiple root are the same solution
      // when their midpoint is tangent to every input.
      const auto match = [&](const GC& x, const GC& y) {
        if (approx_equal(x, y, cfg.cluster_radius * tol.relative_scale))
          return true;
        if (!x.is_circle() || !y.is_circle()) return false;
        const Circle& cx = x.as_circle();
        const Circle& cy = y.as_circle();
        const GC mid = GC::circle((cx.center + cy.center) * 0.5,
                                  0.5 * (cx.radius + cy.radius));
        const Tolerance wide = tol.widened_for(mid);
        return std::all_of(objs.begin(), objs.end(), [&](const GC& in) {
          return is_tangent(tangency(mid, in, wide));
        });
      };
      if (!same_sets_by(a, b, match)) {
        rep.oracle_mismatches.push_back(
            {s,
             objs,
             {static_cast<int>(a.size()), static_cast<int>(b.size())},
             "solver and oracle differ (" + to_string(p) + ")"});
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(
          {s, objs, {}, std::string("threw: ") + e.what()});
    }
  }
  rep.wall_time_seconds = elapsed(start);
  return rep;
}

namespace {

double clearance(Vec2 p, const GC& g) {
  switch (g.kind()) {
    case ObjectKind::kCircle:
      return std::abs(distance(p, g.as_circle().center) - g.as_circle().radius);
    case ObjectKind::kLine:
      return std::abs(g.as_line().signed_distance(p));
    case ObjectKind::kPoint:
      return distance(p, g.as_point().at);
    case ObjectKind::kInfinity:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

}  // namespace

VerificationReport check_equivariance(int trials, std::uint64_t seed,
                                      double radius) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = "equivariance";
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    const SamplerProfile p =
        i % 2 == 0 ? SamplerProfile::kGeneric : SamplerProfile::kMixedLines;
    std::vector<GC> objs;
    SolutionSet base;
    InversionMap map;
    // Inversion centers are kept 0.25 away from every input and solution so
    // that the images stay within a bounded region.
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t sub = trial_seed(s, attempt);
      objs = sample_counted(3, p, sub, &rep.rejected);
      Rng rng(sub ^ 0x5EEDull);
      map.center = {rng.uniform(-6.0, 6.0), rng.uniform(-6.0, 6.0)};
      map.power = (rng.coin() ? 1.0 : -1.0) * rng.uniform(1.0, 20.0);
      try {
        base = solve(objs, Tolerance::for_objects(objs));
      } catch (const std::exception&) {
        ++rep.rejected;
        continue;
      }
      bool clear = true;
      for (const auto& g : objs)
        clear = clear && clearance(map.center, g) > 0.25;
      for (const auto& g : base.objects())
        clear = clear && clearance(map.center, g) > 0.25;
      if (clear) break;
      ++rep.rejected;
    }
    ++rep.trials;
    try {
      const auto tol = Tolerance::for_objects(objs);
      std::vector<GC> image;
      for (const auto& g : objs) image.push_back(invert(g, map, tol));
      const auto itol = Tolerance::for_objects(image);
      const SolutionSet direct = solve(image, itol);
      SolutionSet mapped;
      mapped.infinite = base.infinite;
      for (const auto& g : base.objects()) {
        Solution sol;
        sol.object = invert(g, map, tol.widened_for(g));
        mapped.solutions.push_back(sol);
      }
      rep.max_count_observed =
          std::max(rep.max_count_observed, static_cast<int>(direct.size()));
      double scale = itol.relative_scale;
      for (const auto& g : direct.objects())
        scale = std::max(scale, object_extent(g));
      if (!same_solution_sets(direct, mapped, radius * scale)) {
        rep.violations.push_back(
            {s,
             objs,
             {static_cast<int>(base.size()), static_cast<int>(direct.size())},
             "solve does not commute with the inversion"});
      }
    } catch (const std::exception& e) {
      rep.violations.push_back(
          {s, objs, {}, std::string("threw: ") + e.what()});
    }
  }
  rep.wall_time_seconds = elapsed(start);
  return rep;
}

}  // namespace apollonius
