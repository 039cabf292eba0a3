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

// Card files: a flat JSON object with a fixed key set, e.g.
//
//   {
//     "model_name": "ClimateBert",
//     "public": true,
//     "final_training_hours": 8,
//     "total_hours": 288,
//     "power_watts": 700,
//     "location": "Germany",
//     "mix_gco2eq_per_kwh": 470,
//     "final_emissions_g": 2632,
//     ...
//   }
//
// Absent fields are omitted (null is accepted as absent on read). The total
// duration bounds also serve as the uncertainty of field 8; bias notes and
// per-estimate uncertainty for fields 7 and 9 have no key and are not stored.

#ifndef CLIMATECARD_CARD_FILE_H_
#define CLIMATECARD_CARD_FILE_H_

#include <array>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "climatecard/card.h"

namespace climatecard {

inline constexpr std::array<std::string_view, 15> kCardFileKeys = {
    "model_name",        "public",
    "final_training_hours", "total_hours",
    "total_hours_low_factor", "total_hours_high_factor",
    "power_watts",       "location",
    "mix_gco2eq_per_kwh", "final_emissions_g",
    "total_emissions_g", "inference_per_sample_g",
    "impact_category",   "impact_text",
    "comments",
};

struct CardReadOptions {
  // Unknown keys are an error instead of a warning.
  bool strict = false;
};

// Throws ParseError (with line and column where known) on malformed input.
// Non-fatal problems, such as unknown keys in lenient mode, are appended to
// `warnings` when it is non-null.
ClimateCard ReadCard(std::istream& in, const CardReadOptions& options = {},
                     std::vector<std::string>* warnings = nullptr);
ClimateCard ReadCardFile(const std::filesystem::path& path, const CardReadOptions& options = {},
                         std::vector<std::string>* warnings = nullptr);

// Pretty-printed JSON, keys in kCardFileKeys order, trailing newline.
std::string WriteCard(const ClimateCard& card);

}  // namespace climatecard

#endif  // CLIMATECARD_CARD_FILE_H_
