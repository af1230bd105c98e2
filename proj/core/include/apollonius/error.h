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

#ifndef APOLLONIUS_ERROR_H_
#define APOLLONIUS_ERROR_H_

#include <stdexcept>
#include <string>

namespace apollonius {

enum class ErrorCode {
  kNonFiniteCoordinate,
  kDegenerateRadius,
  kDegenerateLine,
  kCoincident,
  kNotDisjoint,
  kNotIntersecting,
  kNotTangent,
  kPointOnCircle,
  kDegenerateInput,
  kTooFewObjects,
  kNotASolution,
  kAlphaCoincidesWithLine,
  kNotAdmissible,
  kInvalidParams,
  kNoFeasibleGamma,
  kUnknownScenario,
};

const char* to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace apollonius

#endif  // APOLLONIUS_ERROR_H_
