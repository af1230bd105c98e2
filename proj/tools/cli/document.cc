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

#include "cli/document.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace apollonius::cli {

using json = Json;

namespace {

json vec(Vec2 v) { return json::array({v.x, v.y}); }

Vec2 vec_from(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 2 ||
      !j[field][0].is_number() || !j[field][1].is_number()) {
    throw ParseError(std::string("field '") + field + "' must be [x, y]");
  }
  return {j[field][0].get<double>(), j[field][1].get<double>()};
}

double number_from(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ParseError(std::string("field '") + field + "' must be a number");
  }
  return j[field].get<double>();
}

// Point p of the line with dot(n, p) == offset exactly, so loading recovers
// the offset bit for bit. Searched a few ulps around the foot in both
// coordinates; moving only one can skip the target after rounding.
Vec2 exact_foot(const Line& l) {
  const Vec2 foot = l.normal * l.offset;
  if (dot(l.normal, foot) == l.offset) return foot;
  auto shifted = [](double v, int k) {
    const double toward = k < 0 ? -HUGE_VAL : HUGE_VAL;
    for (int i = 0; i < std::abs(k); ++i) v = std::nextafter(v, toward);
    return v;
  };
  for (int radius = 1; radius <= 16; ++radius) {
    for (int i = -radius; i <= radius; ++i) {
      for (int j = -radius; j <= radius; ++j) {
        if (std::max(std::abs(i), std::abs(j)) != radius) continue;
        const Vec2 p{shifted(foot.x, i), shifted(foot.y, j)};
        if (dot(l.normal, p) == l.offset) return p;
      }
    }
  }
  return foot;
}

json kinds_json(const std::vector<TangencyKind>& kinds) {
  json out = json::array();
  for (TangencyKind k : kinds) out.push_back(to_string(k));
  return out;
}

}  // namespace

bool same_object(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjectKind::kCircle:
      return a.as_circle().center == b.as_circle().center &&
             a.as_circle().radius == b.as_circle().radius;
    case ObjectKind::kLine:
      return a.as_line().normal == b.as_line().normal &&
             a.as_line().offset == b.as_line().offset;
    case ObjectKind::kPoint:
      return a.as_point().at == b.as_point().at;
    case ObjectKind::kInfinity:
      return true;
  }
  return false;
}

bool ConfigDocument::operator==(const ConfigDocument& other) const {
  if (objects.size() != other.objects.size()) return false;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (!same_object(objects[i], other.objects[i])) return false;
  }
  return length_eps == other.length_eps && metadata == other.metadata;
}

json object_to_json(const GeneralizedCircle& g) {
  switch (g.kind()) {
    case ObjectKind::kCircle:
      return {{"kind", "circle"},
              {"center", vec(g.as_circle().center)},
              {"radius", g.as_circle().radius}};
    case ObjectKind::kLine: {
      const Line& l = g.as_line();
      return {{"kind", "line"},
              {"point", vec(exact_foot(l))},
              {"direction", vec(l.direction())}};
    }
    case ObjectKind::kPoint:
      return {{"kind", "point"}, {"at", vec(g.as_point().at)}};
    case ObjectKind::kInfinity:
      return {{"kind", "infinity"}};
  }
  return {};
}

GeneralizedCircle object_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("object needs a string 'kind'");
  }
  const std::string kind = j["kind"];
  const Tolerance tol;
  try {
    if (kind == "circle") {
      return normalize(GeneralizedCircle::circle(vec_from(j, "center"),
                                                 number_from(j, "radius")),
                       tol);
    }
    if (kind == "line") {
      const Vec2 p = vec_from(j, "point");
      const Vec2 d = vec_from(j, "direction");
      // direction = perp(normal), so normal = (d.y, -d.x).
      const Vec2 n{d.y, -d.x};
      return normalize(GeneralizedCircle::line(n, dot(n, p)), tol);
    }
    if (kind == "point") {
      return normalize(GeneralizedCircle::point(vec_from(j, "at")), tol);
    }
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid ") + kind + ": " + e.what());
  }
  if (kind == "infinity") return GeneralizedCircle::infinity();
  throw ParseError("unknown kind '" + kind + "'");
}

json to_json(const ConfigDocument& doc) {
  json j;
  j["version"] = kDocumentVersion;
  j["objects"] = json::array();
  for (const auto& g : doc.objects) j["objects"].push_back(object_to_json(g));
  if (doc.length_eps) j["tolerance"] = {{"length_eps", *doc.length_eps}};
  j["metadata"] = doc.metadata;
  return j;
}

ConfigDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be an object");
  if (!j.contains("version") || j["version"] != kDocumentVersion) {
    throw ParseError("unsupported or missing document version");
  }
  if (!j.contains("objects") || !j["objects"].is_array()) {
    throw ParseError("document needs an 'objects' array");
  }
  ConfigDocument doc;
  for (const auto& o : j["objects"]) doc.objects.push_back(object_from_json(o));
  if (j.contains("tolerance")) {
    const json& t = j["tolerance"];
    if (!t.is_object()) throw ParseError("'tolerance' must be an object");
    if (t.contains("length_eps")) {
      const double eps = number_from(t, "length_eps");
      if (!(eps > 0.0)) throw ParseError("length_eps must be positive");
      doc.length_eps = eps;
    }
  }
  if (j.contains("metadata")) {
    const json& m = j["metadata"];
    if (!m.is_object()) throw ParseError("'metadata' must be an object");
    for (const auto& [k, v] : m.items()) {
      if (!v.is_string()) throw ParseError("metadata values must be strings");
      doc.metadata[k] = v.get<std::string>();
    }
  }
  return doc;
}

std::string serialize(const ConfigDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

ConfigDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

json solutions_to_json(const ConfigDocument& input, const SolutionSet& set) {
  json j;
  j["version"] = kDocumentVersion;
  j["inputs"] = to_json(input)["objects"];
  j["infinite"] = set.infinite;
  if (set.witness) j["witness"] = object_to_json(*set.witness);
  j["count"] = set.infinite ? json(nullptr) : json(set.size());
  j["solutions"] = json::array();
  for (const auto& s : set.solutions) {
    json e = object_to_json(s.object);
    e["tangency"] = kinds_json(s.kinds);
    if (s.signs) e["signs"] = s.signs->canonical().to_string();
    j["solutions"].push_back(std::move(e));
  }
  return j;
}

ConfigDocument scenario_document(const Scenario& s) {
  ConfigDocument doc;
  doc.objects = s.inputs;
  doc.metadata["name"] = s.name;
  doc.metadata["provenance"] = s.provenance;
  return doc;
}

json expectations_to_json(const Scenario& s) {
  json j;
  j["version"] = kDocumentVersion;
  j["name"] = s.name;
  j["expected_solution_count"] = s.expected_solution_count
                                     ? json(*s.expected_solution_count)
                                     : json(nullptr);
  j["expected_solutions"] = json::array();
  for (const auto& g : s.expected_solutions) {
    j["expected_solutions"].push_back(object_to_json(g));
  }
  if (s.parts) j["parts"] = {s.parts->first, s.parts->second};
  j["extra_tangencies"] = json::array();
  for (const auto& [a, b] : s.extra_tangencies) {
    j["extra_tangencies"].push_back({a, b});
  }
  j["provenance"] = s.provenance;
  return j;
}

json report_to_json(const VerificationReport& r, std::uint64_t seed) {
  auto violations = [](const std::vector<Violation>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
      json e;
      e["seed"] = v.seed;
      e["detail"] = v.detail;
      e["counts"] = v.counts;
      e["configuration"] = json::array();
      for (const auto& g : v.configuration) {
        e["configuration"].push_back(object_to_json(g));
      }
      out.push_back(std::move(e));
    }
    return out;
  };
  json j;
  j["version"] = kDocumentVersion;
  j["target"] = r.target;
  j["seed"] = seed;
  j["trials"] = r.trials;
  j["bound"] = r.bound;
  j["max_count_observed"] = r.max_count_observed;
  j["rejected"] = r.rejected;
  j["ok"] = r.ok();
  j["violations"] = violations(r.violations);
  j["oracle_mismatches"] = violations(r.oracle_mismatches);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace apollonius::cli
