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

// The climate performance model card and its reporting lints.
//
// Fields 1-5 form the minimum card, fields 6-11 the extended card. A card is
// "extended" as soon as any of fields 6-11 is present.
//
// Lint rules:
//
//   rule_id                 severity  principle     fields
//   minimum-field-missing   error     completeness  1-5
//   duration-order          error     consistency   3
//   extended-field-missing  warning   completeness  6-11
//   emission-mismatch       warning   consistency   7, 8
//   confidence-missing      info      accuracy      7-9
//   offset-claim            warning   transparency  10, 11

#ifndef CLIMATECARD_CARD_H_
#define CLIMATECARD_CARD_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "climatecard/emissions.h"
#include "climatecard/energy_mix.h"
#include "climatecard/error.h"
#include "climatecard/hardware.h"
#include "climatecard/quantities.h"
#include "climatecard/taxonomy.h"

namespace climatecard {

inline constexpr int kCardFieldCount = 11;
inline constexpr double kDefaultTolerance = 0.05;

// Short name of card field 1..11, e.g. "location" for field 5.
std::string_view CardFieldName(int field);

struct PositiveImpact {
  std::optional<ImpactCategory> category;
  std::string text;

  friend bool operator==(const PositiveImpact&, const PositiveImpact&) = default;
};

struct ClimateCard {
  std::string model_name;

  // Minimum card.
  std::optional<bool> is_public;                      // 1
  std::optional<Hours> final_training_duration;       // 2, longest final model
  std::optional<Hours> total_duration;                // 3
  std::optional<UncertaintyBounds> total_duration_bounds;
  std::optional<Watts> power;                         // 4
  std::optional<std::string> location;                // 5

  // Extended card.
  std::optional<GramsPerKwh> mix;                     // 6
  std::optional<EmissionEstimate> final_emissions;    // 7
  std::optional<EmissionEstimate> total_emissions;    // 8
  std::optional<EmissionEstimate> inference_per_sample;  // 9
  std::optional<PositiveImpact> positive_impact;      // 10
  std::optional<std::string> comments;                // 11

  bool IsExtended() const;

  friend bool operator==(const ClimateCard&, const ClimateCard&) = default;
};

enum class Severity { kError, kWarning, kInfo };
enum class Principle { kRelevance, kCompleteness, kConsistency, kTransparency, kAccuracy };

std::string_view ToString(Severity severity);
std::string_view ToString(Principle principle);

struct LintFinding {
  Severity severity = Severity::kInfo;
  std::string rule_id;
  Principle principle = Principle::kCompleteness;
  std::string message;
  std::optional<int> field;

  friend bool operator==(const LintFinding&, const LintFinding&) = default;
};

// "error [completeness] minimum-field-missing (field 5, location): ..."
std::string FormatFinding(const LintFinding& finding);

bool HasErrors(const std::vector<LintFinding>& findings);

// Errors for each missing field 1-5 and for total < final duration.
std::vector<LintFinding> ValidateMinimum(const ClimateCard& card);

// Recomputes fields 7 and 8 from fields 2-4 and 6 and warns when the
// reported value deviates by more than `tolerance` (relative). Warns on each
// missing field 6-11 and notes estimates that carry no confidence statement.
// Field 9 cannot be recomputed: the card does not record inference time or
// sample count.
std::vector<LintFinding> ValidateExtended(const ClimateCard& card,
                                          double tolerance = kDefaultTolerance);

// One warning per offsetting / neutrality claim in fields 10 and 11.
std::vector<LintFinding> LintOffsetClaims(const ClimateCard& card);

struct ValidationOptions {
  double tolerance = kDefaultTolerance;
  bool strict = false;  // warnings become errors
};

// Minimum, extended (when the minimum card has no errors) and offset lints.
std::vector<LintFinding> Validate(const ClimateCard& card, const ValidationOptions& options = {});

// Raised by operations that need a valid card.
class InvalidCardError : public Error {
 public:
  explicit InvalidCardError(std::vector<LintFinding> findings);
  const std::vector<LintFinding>& findings() const { return findings_; }

 private:
  std::vector<LintFinding> findings_;
};

// Inputs for filling a card from experiment facts.
struct CardInputs {
  std::string model_name;
  bool is_public = false;
  Hours final_training_duration;
  Hours total_duration;
  std::optional<UncertaintyBounds> total_duration_bounds;
  // Power given directly, or a rig whose TDP sum is used.
  std::variant<Watts, RigDescription> power;
  std::string location;
  std::optional<int> mix_year;
  // Skips the registry when set.
  std::optional<GramsPerKwh> mix_override;

  struct InferenceRun {
    Hours batch_duration;
    std::int64_t sample_count = 1;
  };
  std::optional<InferenceRun> inference;

  std::optional<PositiveImpact> positive_impact;
  std::optional<std::string> comments;
};

// Fills fields 1-9 from `inputs`, resolving the energy mix in `registry`.
// If the location cannot be resolved, fields 6-9 stay empty unless `strict`,
// in which case the NotFoundError propagates. Estimates get
// likely_overestimate when power came from a rig.
ClimateCard DeriveCard(const CardInputs& inputs, const MixRegistry& registry,
                       bool strict = false);

}  // namespace climatecard

#endif  // CLIMATECARD_CARD_H_
