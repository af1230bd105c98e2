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

// Solution counts of four equal circles centered at the vertices of a square,
// as a function of radius / half-side. Prints one line per interval of
// constant count so the square examples can be placed well inside one.
//
//   sweep_square_radius [lo] [hi] [steps]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "apollonius/solver.h"

namespace {

int count_at(double ratio) {
  using apollonius::GeneralizedCircle;
  const double h = 1.0 / ratio;
  const std::vector<GeneralizedCircle> inputs{
      GeneralizedCircle::circle(h, h, 1.0),
      GeneralizedCircle::circle(-h, h, 1.0),
      GeneralizedCircle::circle(-h, -h, 1.0),
      GeneralizedCircle::circle(h, -h, 1.0)};
  try {
    const auto set =
        apollonius::solve(inputs, apollonius::Tolerance::for_objects(inputs));
    return set.infinite ? -1 : static_cast<int>(set.size());
  } catch (const apollonius::GeometryError&) {
    return -2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const double lo = argc > 1 ? std::atof(argv[1]) : 0.05;
  const double hi = argc > 2 ? std::atof(argv[2]) : 4.0;
  const int steps = argc > 3 ? std::atoi(argv[3]) : 4000;
  if (!(lo > 0.0) || !(hi > lo) || steps < 1) {
    std::fprintf(stderr, "usage: sweep_square_radius [lo] [hi] [steps]\n");
    return 2;
  }
  // -1 marks an infinite family, -2 a degenerate configuration.
  int current = count_at(lo);
  double start = lo;
  for (int i = 1; i <= steps; ++i) {
    const double r = lo + (hi - lo) * i / steps;
    const int c = count_at(r);
    if (c != current || i == steps) {
      std::printf("ratio [%.5f, %.5f): %d solutions\n", start, r, current);
      current = c;
      start = r;
    }
  }
  return 0;
}
