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

#include "cli/commands.h"

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "apollonius/classify.h"
#include "apollonius/constructions.h"
#include "apollonius/solver.h"
#include "cli/document.h"
#include "cli/svg.h"

namespace apollonius::cli {
namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  verification found violations\n"
    "  2  usage or parse error\n"
    "  3  infinite solution family (document still written)\n"
    "  4  fewer than three objects\n"
    "  5  tangency graph not realizable\n"
    "  6  other geometry error (invalid parameters, unknown scenario)\n";

struct Globals {
  std::optional<double> tolerance;
  std::string output;
  bool quiet = false;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  const Globals& g;

  void emit(const std::string& text) const {
    if (g.output.empty()) {
      out << text;
    } else {
      write_file(g.output, text);
    }
  }
  std::ostream& info() const {
    static std::ostringstream sink;
    sink.str("");
    return g.quiet ? sink : err;
  }
};

int exit_for(const GeometryError& e) {
  switch (e.code()) {
    case ErrorCode::kTooFewObjects:
      return kExitTooFewObjects;
    case ErrorCode::kNonFiniteCoordinate:
    case ErrorCode::kDegenerateRadius:
    case ErrorCode::kDegenerateLine:
      return kExitUsage;
    default:
      return kExitGeometry;
  }
}

Tolerance tolerance_for(const ConfigDocument& doc, const Globals& g) {
  double eps = Tolerance{}.length_eps;
  if (doc.length_eps) eps = *doc.length_eps;
  if (g.tolerance) eps = *g.tolerance;
  return Tolerance::for_objects(doc.objects, eps);
}

// --- solve -----------------------------------------------------------------

int cmd_solve(const Io& io, const std::string& input, const std::string& svg) {
  const ConfigDocument doc = parse_document(read_file(input));
  const SolutionSet set = solve(doc.objects, tolerance_for(doc, io.g));
  io.emit(solutions_to_json(doc, set).dump(2) + "\n");
  if (!svg.empty()) write_file(svg, render_svg(doc.objects, set.objects()));
  if (set.infinite) {
    io.info() << "infinite family of solutions\n";
    return kExitInfinite;
  }
  io.info() << set.size() << " solution(s)\n";
  return kExitOk;
}

// --- classify --------------------------------------------------------------

std::string extras(const std::vector<GeneralizedCircle>& pts) {
  std::string s;
  for (const auto& p : pts) s += p.is_infinity() ? " +inf" : " +O";
  return s;
}

int cmd_classify(const Io& io, const std::string& input) {
  const ConfigDocument doc = parse_document(read_file(input));
  if (doc.objects.size() < 3) {
    throw GeometryError(ErrorCode::kTooFewObjects,
                        "classify needs exactly three objects");
  }
  if (doc.objects.size() > 3) {
    throw ParseError("classify needs exactly three objects");
  }
  const Tolerance tol = tolerance_for(doc, io.g);
  const auto& o = doc.objects;
  const FitzgeraldLabel label = fitzgerald_label(o[0], o[1], o[2], tol);
  std::ostringstream text;
  text << label.to_string();
  if (label.bracketed) text << ", infinite";
  text << "\n";

  // Type mode: the first two lines found frame the third object.
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < 3; ++i) {
    if (o[i].is_line()) lines.push_back(i);
  }
  if (lines.size() >= 2) {
    const Line& l1 = o[lines[0]].as_line();
    const Line& l2 = o[lines[1]].as_line();
    const std::size_t k = 3 - lines[0] - lines[1];
    if (std::abs(cross(l1.normal, l2.normal)) > tol.length_eps) {
      const ITypeResult r = i_type(SectorFrame::make(l1, l2), o[k], tol);
      text << "type " << roman(r.row) << ", " << r.distribution.to_string()
           << extras(r.extra_points) << ", total " << r.total << "\n";
    } else {
      const TTypeResult r = t_type(l1, l2, o[k], tol);
      text << "type " << roman(r.row) << ", " << r.distribution.to_string()
           << extras(r.extra_points);
      if (r.infinite) {
        text << ", infinite";
      } else {
        text << ", total " << r.total;
      }
      text << "\n";
    }
  }
  io.emit(text.str());
  return kExitOk;
}

// --- generate --------------------------------------------------------------

std::map<std::string, double> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, double> params;
  for (const auto& p : kv) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("parameter '" + p + "' is not key=value");
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(p.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != p.size() - eq - 1) {
      throw ParseError("parameter '" + p + "' has no numeric value");
    }
    params[p.substr(0, eq)] = v;
  }
  return params;
}

double take(std::map<std::string, double>& params, const std::string& key,
            double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

std::variant<Scenario, Unrealizable> build_scenario(
    const std::string& name, std::map<std::string, double> params) {
  std::optional<std::variant<Scenario, Unrealizable>> result;
  if (name == "c1") {
    const double a1 = take(params, "a1", 1.0);
    const double a2 = take(params, "a2", 7.0);
    if (params.empty()) result = construction_1(a1, a2);
  } else if (name == "c2") {
    const double a = take(params, "a", 1.0);
    const double branch = take(params, "branch", kConstruction2DefaultBranch);
    if (params.empty()) result = construction_2(a, branch);
  } else if (params.empty()) {
    result = scenario_by_name(name);
  }
  if (!result) {
    throw GeometryError(ErrorCode::kInvalidParams,
                        "unknown parameter '" + params.begin()->first +
                            "' for scenario '" + name + "'");
  }
  return *result;
}

std::string sidecar_path(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() > ext.size() &&
      path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
    return path.substr(0, path.size() - ext.size()) + ".expected.json";
  }
  return path + ".expected.json";
}

int cmd_generate(const Io& io, const std::string& name,
                 const std::vector<std::string>& kv) {
  const auto built = build_scenario(name, parse_params(kv));
  if (const auto* u = std::get_if<Unrealizable>(&built)) {
    io.err << "unrealizable: " << u->reason << "\n";
    return kExitUnrealizable;
  }
  const Scenario& s = std::get<Scenario>(built);
  const std::string path = io.g.output.empty() ? s.name + ".json" : io.g.output;
  write_file(path, serialize(scenario_document(s)));
  write_file(sidecar_path(path), expectations_to_json(s).dump(2) + "\n");
  io.info() << "wrote " << path << " and " << sidecar_path(path) << "\n";
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Io& io, const std::string& target,
               std::optional<int> trials, std::uint64_t seed,
               const std::string& profile_name, const std::string& report) {
  std::optional<SamplerProfile> profile;
  if (!profile_name.empty()) {
    profile = parse_profile(profile_name);
    if (!profile) throw ParseError("unknown profile '" + profile_name + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  if (target == "triples") {
    r = check_theorem(3, trials.value_or(1000), seed, profile);
  } else if (target == "quadruples") {
    r = check_theorem(4, trials.value_or(1000), seed, profile);
  } else if (target == "quintuples") {
    r = check_theorem(5, trials.value_or(1000), seed, profile);
  } else if (target == "tables") {
    r = check_tables(trials.value_or(100), seed);
  } else if (target == "pairing") {
    const int n = trials.value_or(1000);
    r = check_pairing(n, seed, std::max(1, n / 10));
  } else if (target == "equivariance") {
    r = check_equivariance(trials.value_or(1000), seed);
  } else if (target == "oracle") {
    r = check_oracle_agreement(trials.value_or(100), seed, OracleConfig{});
  } else if (target == "scenarios") {
    r = check_scenarios();
  } else if (target == "kmn") {
    r = check_kmn(9);
  } else {
    throw ParseError("unknown verify target '" + target + "'");
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const std::string doc = report_to_json(r, seed).dump(2) + "\n";
  if (!report.empty()) {
    write_file(report, doc);
  } else if (!io.g.output.empty()) {
    io.emit(doc);
  }
  io.info() << r.target << ": trials " << r.trials << ", max "
            << r.max_count_observed;
  if (r.bound > 0) io.info() << " (bound " << r.bound << ")";
  io.info() << ", violations " << r.violations.size() << ", oracle mismatches "
            << r.oracle_mismatches.size() << ", rejected " << r.rejected << ", "
            << wall << " s\n";
  for (const auto& v : r.violations) {
    io.info() << "  seed " << v.seed << ": " << v.detail << "\n";
  }
  for (const auto& v : r.oracle_mismatches) {
    io.info() << "  seed " << v.seed << ": " << v.detail << "\n";
  }
  return r.ok() ? kExitOk : kExitViolations;
}

// --- render ----------------------------------------------------------------

int cmd_render(const Io& io, const std::string& input, const std::string& svg,
               bool show_solutions) {
  const ConfigDocument doc = parse_document(read_file(input));
  std::vector<GeneralizedCircle> sols;
  if (show_solutions && doc.objects.size() >= 3) {
    sols = solve(doc.objects, tolerance_for(doc, io.g)).objects();
  }
  const std::string text = render_svg(doc.objects, sols);
  if (!svg.empty()) {
    write_file(svg, text);
  } else {
    io.emit(text);
  }
  return kExitOk;
}

}  // namespace

VerificationReport check_scenarios() {
  VerificationReport r;
  r.target = "scenarios";
  std::vector<std::string> names = registry_names();
  names.push_back("kmn-9-2");
  for (const auto& name : names) {
    ++r.trials;
    try {
      const auto s = scenario_by_name(name);
      if (std::holds_alternative<Unrealizable>(s)) {
        r.violations.push_back(
            {0, {}, {}, name + ": unexpectedly unrealizable"});
        continue;
      }
      const Scenario& sc = std::get<Scenario>(s);
      for (const auto& p : validate_scenario(sc)) {
        r.violations.push_back({0, sc.inputs, {}, name + ": " + p});
      }
      if (sc.expected_solution_count) {
        r.max_count_observed =
            std::max(r.max_count_observed, *sc.expected_solution_count);
      }
    } catch (const std::exception& e) {
      r.violations.push_back({0, {}, {}, name + ": " + e.what()});
    }
  }
  return r;
}

VerificationReport check_kmn(int max_side) {
  VerificationReport r;
  r.target = "kmn";
  for (int m = 1; m <= max_side; ++m) {
    for (int n = 1; n <= m; ++n) {
      ++r.trials;
      const std::string cell =
          "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
      try {
        const auto w = kmn_witness(m, n);
        if (const auto* u = std::get_if<Unrealizable>(&w)) {
          const BoundCitation want = n == 3   ? BoundCitation::kTripleBound
                                     : n == 4 ? BoundCitation::kQuadrupleBound
                                              : BoundCitation::kQuintupleBound;
          if (n < 3 || u->citation != want) {
            r.violations.push_back({0, {}, {m, n}, cell + ": wrong citation"});
          }
          continue;
        }
        const Scenario& sc = std::get<Scenario>(w);
        for (const auto& p : validate_scenario(sc)) {
          r.violations.push_back({0, sc.inputs, {m, n}, cell + ": " + p});
        }
        r.max_count_observed = std::max(r.max_count_observed, m);
      } catch (const std::exception& e) {
        r.violations.push_back({0, {}, {m, n}, cell + ": " + e.what()});
      }
    }
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Tangent generalized circles: solve, classify, generate, "
      "verify, render."};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tolerance", g.tolerance, "Length tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Write the main output to a file");
  app.add_flag("-q,--quiet", g.quiet, "Suppress informational messages");

  std::string input;
  std::string svg;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a configuration file");
  solve_cmd->add_option("input", input, "Configuration document")->required();
  solve_cmd->add_option("--svg", svg, "Also render the solutions to SVG");

  auto* classify_cmd =
      app.add_subcommand("classify", "Label a triple and its table row");
  classify_cmd->add_option("input", input, "Configuration document")
      ->required();

  std::string name;
  std::vector<std::string> params;
  auto* generate_cmd =
      app.add_subcommand("generate", "Write a named scenario to a file");
  generate_cmd
      ->add_option("name", name,
                   "square1, square2, five, c1, c2, c3, c4, kmn-M-N")
      ->required();
  generate_cmd->add_option("--param", params, "Scenario parameter key=value");

  std::string target;
  std::optional<int> trials;
  std::uint64_t seed = 1;
  std::string profile;
  std::string report;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification target");
  verify_cmd
      ->add_option("target", target,
                   "triples, quadruples, quintuples, tables, pairing, "
                   "equivariance, oracle, scenarios, kmn")
      ->required();
  verify_cmd->add_option("--trials", trials, "Number of trials")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Master seed");
  verify_cmd->add_option("--profile", profile,
                         "generic, near-tangent, mixed-lines, annulus");
  verify_cmd->add_option("--report", report, "Report file (JSON)");

  bool show_solutions = false;
  auto* render_cmd = app.add_subcommand("render", "Draw a configuration");
  render_cmd->add_option("input", input, "Configuration document")->required();
  render_cmd->add_option("--svg", svg, "SVG output path");
  render_cmd->add_flag("--show-solutions", show_solutions,
                       "Solve and draw the solutions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << kExitCodeHelp;
    return kExitUsage;
  }

  const Io io{out, err, g};
  try {
    if (*solve_cmd) return cmd_solve(io, input, svg);
    if (*classify_cmd) return cmd_classify(io, input);
    if (*generate_cmd) return cmd_generate(io, name, params);
    if (*verify_cmd) {
      return cmd_verify(io, target, trials, seed, profile, report);
    }
    if (*render_cmd) return cmd_render(io, input, svg, show_solutions);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitGeometry;
  }
  return kExitUsage;
}

}  // namespace apollonius::cli
