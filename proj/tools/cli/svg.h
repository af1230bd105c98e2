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

// Deterministic SVG 1.1 figures of a configuration and its solutions.

#ifndef APOLLONIUS_TOOLS_CLI_SVG_H_
#define APOLLONIUS_TOOLS_CLI_SVG_H_

#include <span>
#include <string>

#include "apollonius/geometry.h"

namespace apollonius::cli {

// Inputs are stroked solid in <g id="inputs">, solutions dashed in
// <g id="solutions">. Finite points become small filled markers; infinity is
// listed in a legend. The viewport is the bounding box of all finite objects
// padded by 10% on each side; lines are clipped to it.
std::string render_svg(std::span<const GeneralizedCircle> inputs,
                       std::span<const GeneralizedCircle> solutions);

}  // namespace apollonius::cli

#endif  // APOLLONIUS_TOOLS_CLI_SVG_H_
