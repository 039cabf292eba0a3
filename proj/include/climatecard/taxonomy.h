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

#ifndef CLIMATECARD_TAXONOMY_H_
#define CLIMATECARD_TAXONOMY_H_

#include <optional>
#include <string_view>

namespace climatecard {

// Stage of the impact stack a piece of work belongs to, or a direct
// positive impact.
enum class ImpactCategory {
  kFundamentalTheories,
  kBuildingBlockTools,
  kApplicableTools,
  kDeployedApplications,
  kDirectPositive,
};

// Which emissions an estimate accounts for. Only the first is ever
// quantified; the other two are narrative.
enum class ScopeLabel {
  kOwnExperiments,
  kEnablingOtherResearchers,
  kDownstreamUse,
};

// Snake-case identifiers used in card files, e.g. "building_block_tools".
std::string_view ToString(ImpactCategory category);
std::optional<ImpactCategory> ParseImpactCategory(std::string_view text);

// Human label, e.g. "Building block tools".
std::string_view DisplayName(ImpactCategory category);

// "scope1_own_experiments", ...
std::string_view ToString(ScopeLabel scope);
std::optional<ScopeLabel> ParseScopeLabel(std::string_view text);

}  // namespace climatecard

#endif  // CLIMATECARD_TAXONOMY_H_
