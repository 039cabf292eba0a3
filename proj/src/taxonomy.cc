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

#include "climatecard/taxonomy.h"

#include <array>
#include <utility>

namespace climatecard {
namespace {

struct CategoryName {
  ImpactCategory category;
  std::string_view id;
  std::string_view display;
};

constexpr std::array<CategoryName, 5> kCategories = {{
    {ImpactCategory::kFundamentalTheories, "fundamental_theories", "Fundamental theories"},
    {ImpactCategory::kBuildingBlockTools, "building_block_tools", "Building block tools"},
    {ImpactCategory::kApplicableTools, "applicable_tools", "Applicable tools"},
    {ImpactCategory::kDeployedApplications, "deployed_applications", "Deployed applications"},
    {ImpactCategory::kDirectPositive, "direct_positive", "Direct positive impact"},
}};

constexpr std::array<std::pair<ScopeLabel, std::string_view>, 3> kScopes = {{
    {ScopeLabel::kOwnExperiments, "scope1_own_experiments"},
    {ScopeLabel::kEnablingOtherResearchers, "scope2_enabling_other_researchers"},
    {ScopeLabel::kDownstreamUse, "scope3_downstream_use"},
}};

}  // namespace

std::string_view ToString(ImpactCategory category) {
  for (const auto& entry : kCategories) {
    if (entry.category == category) return entry.id;
  }
  return "unknown";
}

std::string_view DisplayName(ImpactCategory category) {
  for (const auto& entry : kCategories) {
    if (entry.category == category) return entry.display;
  }
  return "Unknown";
}

std::optional<ImpactCategory> ParseImpactCategory(std::string_view text) {
  for (const auto& entry : kCategories) {
    if (entry.id == text) return entry.category;
  }
  return std::nullopt;
}

std::string_view ToString(ScopeLabel scope) {
  for (const auto& [label, id] : kScopes) {
    if (label == scope) return id;
  }
  return "unknown";
}

std::optional<ScopeLabel> ParseScopeLabel(std::string_view text) {
  for (const auto& [label, id] : kScopes) {
    if (id == text) return label;
  }
  return std::nullopt;
}

}  // namespace climatecard
