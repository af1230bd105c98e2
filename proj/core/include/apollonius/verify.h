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

// Independent numerical oracle and seeded randomized checks of the solver's
// count bounds, the classification tables and the pairing property.

#ifndef APOLLONIUS_VERIFY_H_
#define APOLLONIUS_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apollonius/geometry.h"
#include "apollonius/solver.h"

namespace apollonius {

struct OracleConfig {
  int starts = 256;
  // Largest accepted residual of the normalized cycle equations.
  double residual_tol = 1e-11;
  // Hits closer than this (in normalized cycle coordinates) are one solution;
  // also the set comparison radius, relative to the configuration size.
  double cluster_radius = 1e-6;
  std::uint64_t seed = 1;
};

// Multi-start Levenberg-Marquardt search in cycle coordinates (a, b, c, d)
// of a (x^2 + y^2) + b x + c y + d = 0, which hold circles and lines alike,
// plus common points by intersection filtering. Shares no code with the
// elimination solver. Degenerate inputs are reported as infinite without
// running the search.
SolutionSet oracle_solve(std::span<const GeneralizedCircle> objects,
                         const OracleConfig& cfg, const Tolerance& tol);

enum class SamplerProfile { kGeneric, kNearTangent, kMixedLines, kAnnulus };

std::string to_string(SamplerProfile p);
std::optional<SamplerProfile> parse_profile(const std::string& name);
inline constexpr SamplerProfile kAllProfiles[] = {
    SamplerProfile::kGeneric, SamplerProfile::kNearTangent,
    SamplerProfile::kMixedLines, SamplerProfile::kAnnulus};

// splitmix64 step: per-trial seeds from a master seed and a trial index.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Uniform double in [lo, hi) from the top 53 bits of a 64-bit word, so the
// stream is identical on every standard library.
double uniform_from_bits(std::uint64_t bits, double lo, double hi);

// `count` pairwise distinct, non-degenerate objects drawn from `profile`.
// Degenerate draws are rejected and redrawn from a derived seed.
std::vector<GeneralizedCircle> sample_configuration(int count,
                                                    SamplerProfile profile,
                                                    std::uint64_t seed);

struct Violation {
  std::uint64_t seed = 0;
  std::vector<GeneralizedCircle> configuration;
  std::vector<int> counts;
  std::string detail;
};

struct VerificationReport {
  std::string target;
  int trials = 0;
  int max_count_observed = 0;
  int bound = 0;
  int rejected = 0;
  std::vector<Violation> violations;
  std::vector<Violation> oracle_mismatches;
  // Excluded from determinism comparisons.
  double wall_time_seconds = 0.0;

  bool ok() const { return violations.empty() && oracle_mismatches.empty(); }
};

// Solution counts of random configurations of 3, 4 or 5 objects against the
// bounds 8, 6 and 4. With no profile the four profiles alternate per trial.
VerificationReport check_theorem(int num_inputs, int trials, std::uint64_t seed,
                                 std::optional<SamplerProfile> profile);

// Every row of both position tables, each representative pushed through
// `trials` random similarities (rotation, reflection, scale, translation).
VerificationReport check_tables(int trials, std::uint64_t seed);

// At most two solutions per sign class on random triples and quadruples;
// mirror symmetry of the pairs for collinear centers (`collinear_trials`).
VerificationReport check_pairing(int trials, std::uint64_t seed,
                                 int collinear_trials);

// Solver and oracle agree as sets on random configurations.
VerificationReport check_oracle_agreement(int trials, std::uint64_t seed,
                                          const OracleConfig& cfg);

// Solving commutes with a random inversion (sets equal within `radius`,
// relative to the configuration size).
VerificationReport check_equivariance(int trials, std::uint64_t seed,
                                      double radius = 1e-6);

// True when the two solution sets hold the same objects within `radius`.
bool same_solution_sets(const SolutionSet& a, const SolutionSet& b,
                        double radius);

}  // namespace apollonius

#endif  // APOLLONIUS_VERIFY_H_
