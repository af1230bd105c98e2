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

// JSON documents read and written by the command-line tool.
//
// A configuration document looks like
//
//   {"version": 1,
//    "objects": [{"kind": "circle", "center": [0, 0], "radius": 1},
//                {"kind": "line", "point": [0, 2], "direction": [1, 0]},
//                {"kind": "point", "at": [1, 1]},
//                {"kind": "infinity"}],
//    "tolerance": {"length_eps": 1e-9},
//    "metadata": {"name": "c3"}}
//
// Lines are normalized on load. Numbers are written in shortest round-trip
// form, so every double survives a save/load cycle bit for bit.

#ifndef APOLLONIUS_TOOLS_CLI_DOCUMENT_H_
#define APOLLONIUS_TOOLS_CLI_DOCUMENT_H_

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apollonius/constructions.h"
#include "apollonius/geometry.h"
#include "apollonius/solver.h"
#include "apollonius/verify.h"

namespace apollonius::cli {

// Keys keep insertion order so "kind" leads every object.
using Json = nlohmann::ordered_json;

inline constexpr int kDocumentVersion = 1;

// Malformed input: bad JSON, wrong version, unknown kind, missing field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigDocument {
  std::vector<GeneralizedCircle> objects;
  std::optional<double> length_eps;
  std::map<std::string, std::string> metadata;

  bool operator==(const ConfigDocument& other) const;
};

Json object_to_json(const GeneralizedCircle& g);
GeneralizedCircle object_from_json(const Json& j);

Json to_json(const ConfigDocument& doc);
ConfigDocument document_from_json(const Json& j);

std::string serialize(const ConfigDocument& doc);
ConfigDocument parse_document(const std::string& text);

// Bitwise equality of kinds and fields.
bool same_object(const GeneralizedCircle& a, const GeneralizedCircle& b);

// Solution document written by `solve`.
Json solutions_to_json(const ConfigDocument& input, const SolutionSet& set);

// Scenario inputs as a configuration, and its expectations sidecar.
ConfigDocument scenario_document(const Scenario& s);
Json expectations_to_json(const Scenario& s);

// Machine-readable verification report. Wall time is left out so equal seeds
// give byte-identical files.
Json report_to_json(const VerificationReport& r, std::uint64_t seed);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace apollonius::cli

#endif  // APOLLONIUS_TOOLS_CLI_DOCUMENT_H_
