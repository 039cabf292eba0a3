// Copyright 2026 The climatecard Authors
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

// Card renderers. Output is UTF-8 with LF line endings and no trailing
// whitespace, and is byte-identical for identical cards.

#ifndef CLIMATECARD_RENDER_H_
#define CLIMATECARD_RENDER_H_

#include <string>
#include <string_view>

#include "climatecard/card.h"

namespace climatecard {

// Row labels, 1-based: "Model publicly available?", ...
std::string_view CardRowLabel(int field);

// All three throw InvalidCardError when ValidateMinimum reports errors.
std::string RenderMarkdown(const ClimateCard& card);
std::string RenderLatex(const ClimateCard& card);
// Also throws InvalidCardError when field 7 is absent.
std::string RenderHubYaml(const ClimateCard& card);

std::string EscapeLatex(std::string_view text);

}  // namespace climatecard

#endif  // CLIMATECARD_RENDER_H_
