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

#include "climatecard/card.h"

#include <array>
#include <cmath>
#include <limits>

#include "climatecard/text.h"

namespace climatecard {
namespace {

constexpr std::array<std::string_view, kCardFieldCount> kFieldNames = {
    "public",        "final training duration", "total duration",
    "power",         "location",                "energy mix",
    "final emissions", "total emissions",       "inference emissions per sample",
    "positive impact", "comments",
};

// Longest phrase first so "offsetting" is one hit, not two.
constexpr std::array<std::string_view, 5> kOffsetClaims = {
    "carbon neutral", "climate neutral", "offsetting", "offset", "net zero",
};

LintFinding Finding(Severity severity, std::string_view rule_id, Principle principle,
                    std::string message, std::optional<int> field) {
  return LintFinding{severity, std::string(rule_id), principle, std::move(message), field};
}

double RelativeDeviation(double reported, double computed) {
  if (computed == 0.0) {
    return reported == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::fabs(reported - computed) / computed;
}

void CheckEmission(const std::optional<EmissionEstimate>& reported, int field, Hours duration,
                   const ClimateCard& card, double tolerance, std::vector<LintFinding>& out) {
  if (!reported || !card.power || !card.mix) return;
  const Kilowatts power = WattsToKilowatts(*card.power);
  const GramsCO2e computed = TrainingEmissions({duration, power, *card.mix});
  const double deviation = RelativeDeviation(reported->emissions.value(), computed.value());
  if (deviation <= tolerance) return;
  out.push_back(Finding(
      Severity::kWarning, "emission-mismatch", Principle::kConsistency,
      "reported " + FormatNumber(reported->emissions.value()) + " g (" +
          FormatMass(reported->emissions) + ") but " + FormatNumber(duration.value()) + " h x " +
          FormatNumber(power.value()) + " kW x " + FormatNumber(card.mix->value()) +
          " gCO2eq/kWh = " + FormatNumber(computed.value()) + " g (" + FormatMass(computed) +
          "); relative deviation " + RoundDecimal(deviation, 4) + " exceeds tolerance " +
          FormatNumber(tolerance),
      field));
}

void ScanClaims(std::string_view text, int field, std::vector<LintFinding>& out) {
  const std::string haystack = CanonicalKey(text);
  for (std::size_t pos = 0; pos < haystack.size();) {
    std::string_view hit;
    for (std::string_view phrase : kOffsetClaims) {
      if (std::string_view(haystack).substr(pos).starts_with(phrase)) {
        hit = phrase;
        break;
      }
    }
    if (hit.empty()) {
      ++pos;
      continue;
    }
    out.push_back(Finding(
        Severity::kWarning, "offset-claim", Principle::kTransparency,
        "mentions '" + std::string(hit) +
            "': voluntary climate contributions are not emission reductions and should not be "
            "reported as offsetting; report the emissions themselves",
        field));
    pos += hit.size();
  }
}

}  // namespace

std::string_view CardFieldName(int field) {
  if (field < 1 || field > kCardFieldCount) return "unknown";
  return kFieldNames[field - 1];
}

bool ClimateCard::IsExtended() const {
  return mix || final_emissions || total_emissions || inference_per_sample || positive_impact ||
         comments;
}

std::string_view ToString(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kInfo:
      break;
  }
  return "info";
}

std::string_view ToString(Principle principle) {
  switch (principle) {
    case Principle::kRelevance:
      return "relevance";
    case Principle::kCompleteness:
      return "completeness";
    case Principle::kConsistency:
      return "consistency";
    case Principle::kTransparency:
      return "transparency";
    case Principle::kAccuracy:
      break;
  }
  return "accuracy";
}

std::string FormatFinding(const LintFinding& finding) {
  std::string out = std::string(ToString(finding.severity)) + " [" +
                    std::string(ToString(finding.principle)) + "] " + finding.rule_id;
  if (finding.field) {
    out += " (field " + std::to_string(*finding.field) + ", " +
           std::string(CardFieldName(*finding.field)) + ")";
  }
  return out + ": " + finding.message;
}

bool HasErrors(const std::vector<LintFinding>& findings) {
  for (const auto& finding : findings) {
    if (finding.severity == Severity::kError) return true;
  }
  return false;
}

std::vector<LintFinding> ValidateMinimum(const ClimateCard& card) {
  std::vector<LintFinding> out;
  const std::array<bool, 5> present = {
      card.is_public.has_value(),
      card.final_training_duration.has_value(),
      card.total_duration.has_value(),
      card.power.has_value(),
      card.location.has_value() && !CanonicalKey(*card.location).empty(),
  };
  for (int field = 1; field <= 5; ++field) {
    if (present[field - 1]) continue;
    out.push_back(Finding(Severity::kError, "minimum-field-missing", Principle::kCompleteness,
                          "required on every card", field));
  }
  if (card.final_training_duration && card.total_duration &&
      *card.total_duration < *card.final_training_duration) {
    out.push_back(Finding(Severity::kError, "duration-order", Principle::kConsistency,
                          "total duration " + FormatHours(*card.total_duration) +
                              " is shorter than the final training duration " +
                              FormatHours(*card.final_training_duration),
                          3));
  }
  return out;
}

std::vector<LintFinding> ValidateExtended(const ClimateCard& card, double tolerance) {
  std::vector<LintFinding> out;
  const std::array<bool, 6> present = {
      card.mix.has_value(),
      card.final_emissions.has_value(),
      card.total_emissions.has_value(),
      card.inference_per_sample.has_value(),
      card.positive_impact.has_value(),
      card.comments.has_value(),
  };
  for (int field = 6; field <= kCardFieldCount; ++field) {
    if (present[field - 6]) continue;
    out.push_back(Finding(Severity::kWarning, "extended-field-missing", Principle::kCompleteness,
                          "missing; state why it is excluded and which data would be needed "
                          "to provide it",
                          field));
  }

  if (card.final_training_duration) {
    CheckEmission(card.final_emissions, 7, *card.final_training_duration, card, tolerance, out);
  }
  if (card.total_duration) {
    CheckEmission(card.total_emissions, 8, *card.total_duration, card, tolerance, out);
  }

  const auto note_confidence = [&](const std::optional<EmissionEstimate>& estimate, int field,
                                   bool has_bounds_elsewhere) {
    if (!estimate || estimate->uncertainty || estimate->bias_note || has_bounds_elsewhere) return;
    out.push_back(Finding(Severity::kInfo, "confidence-missing", Principle::kAccuracy,
                          "no uncertainty bounds or bias note; state the level of confidence, "
                          "e.g. in the comments",
                          field));
  };
  note_confidence(card.final_emissions, 7, false);
  note_confidence(card.total_emissions, 8, card.total_duration_bounds.has_value());
  note_confidence(card.inference_per_sample, 9, false);
  return out;
}

std::vector<LintFinding> LintOffsetClaims(const ClimateCard& card) {
  std::vector<LintFinding> out;
  if (card.positive_impact) ScanClaims(card.positive_impact->text, 10, out);
  if (card.comments) ScanClaims(*card.comments, 11, out);
  return out;
}

std::vector<LintFinding> Validate(const ClimateCard& card, const ValidationOptions& options) {
  std::vector<LintFinding> out = ValidateMinimum(card);
  if (!HasErrors(out)) {
    auto extended = ValidateExtended(card, options.tolerance);
    out.insert(out.end(), extended.begin(), extended.end());
  }
  auto claims = LintOffsetClaims(card);
  out.insert(out.end(), claims.begin(), claims.end());
  if (options.strict) {
    for (auto& finding : out) {
      if (finding.severity == Severity::kWarning) finding.severity = Severity::kError;
    }
  }
  return out;
}

InvalidCardError::InvalidCardError(std::vector<LintFinding> findings)
    : Error([&] {
        std::string message = "invalid card";
        for (const auto& finding : findings) {
          if (finding.severity == Severity::kError) message += "\n  " + FormatFinding(finding);
        }
        return message;
      }()),
      findings_(std::move(findings)) {}

ClimateCard DeriveCard(const CardInputs& inputs, const MixRegistry& registry, bool strict) {
  ClimateCard card;
  card.model_name = inputs.model_name;
  card.is_public = inputs.is_public;
  card.final_training_duration = inputs.final_training_duration;
  card.total_duration = inputs.total_duration;
  card.total_duration_bounds = inputs.total_duration_bounds;
  card.location = inputs.location;
  card.positive_impact = inputs.positive_impact;
  card.comments = inputs.comments;

  std::optional<BiasNote> bias;
  if (const auto* rig = std::get_if<RigDescription>(&inputs.power)) {
    card.power = PeakPower(*rig);
    bias = BiasNote::kLikelyOverestimate;
  } else {
    card.power = std::get<Watts>(inputs.power);
  }

  if (inputs.mix_override) {
    card.mix = inputs.mix_override;
  } else {
    try {
      card.mix = registry.Lookup(inputs.location, inputs.mix_year).intensity;
    } catch (const NotFoundError&) {
      if (strict) throw;
      return card;
    }
  }

  // Emissions are computed from the stored watt value so that re-validating
  // the card recomputes exactly the same numbers.
  const Kilowatts power = WattsToKilowatts(*card.power);
  card.final_emissions =
      EmissionEstimate{TrainingEmissions({inputs.final_training_duration, power, *card.mix}),
                       std::nullopt, bias};
  card.total_emissions =
      EmissionEstimate{TrainingEmissions({inputs.total_duration, power, *card.mix}),
                       inputs.total_duration_bounds, bias};
  if (inputs.inference) {
    const InferenceProfile profile(inputs.inference->batch_duration, power, *card.mix,
                                   inputs.inference->sample_count);
    card.inference_per_sample =
        EmissionEstimate{InferenceEmissionsPerSample(profile), std::nullopt, bias};
  }
  return card;
}

}  // namespace climatecard
