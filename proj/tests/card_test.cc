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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "climatecard/energy_mix.h"
#include "climatecard/hardware.h"
#include "gtest/gtest.h"

namespace climatecard {
namespace {

ClimateCard ReferenceCard() {
  ClimateCard card;
  card.model_name = "ClimateBert";
  card.is_public = true;
  card.final_training_duration = Hours(8);
  card.total_duration = Hours(288);
  card.power = Watts(700);
  card.location = "Germany";
  card.mix = GramsPerKwh(470);
  card.final_emissions = EmissionEstimate{GramsCO2e(2632), std::nullopt, std::nullopt};
  card.total_emissions = EmissionEstimate{GramsCO2e(94752), std::nullopt, std::nullopt};
  card.inference_per_sample = EmissionEstimate{GramsCO2e(0.00061523), std::nullopt, std::nullopt};
  card.positive_impact = PositiveImpact{ImpactCategory::kBuildingBlockTools, "Climate text analysis."};
  card.comments = "The duration of all experiments is a pessimistic estimate.";
  return card;
}

std::size_t Count(const std::vector<LintFinding>& findings, Severity severity,
                  std::string_view rule_id = {}) {
  return std::count_if(findings.begin(), findings.end(), [&](const LintFinding& f) {
    return f.severity == severity && (rule_id.empty() || f.rule_id == rule_id);
  });
}

std::size_t CountPrinciple(const std::vector<LintFinding>& findings, Principle principle) {
  return std::count_if(findings.begin(), findings.end(),
                       [&](const LintFinding& f) { return f.principle == principle; });
}

TEST(ValidateMinimumTest, ReferenceCardIsClean) {
  EXPECT_TRUE(ValidateMinimum(ReferenceCard()).empty());
}

TEST(ValidateMinimumTest, MissingLocation) {
  ClimateCard card = ReferenceCard();
  card.location.reset();
  const auto findings = ValidateMinimum(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].severity, Severity::kError);
  EXPECT_EQ(findings[0].principle, Principle::kCompleteness);
  EXPECT_EQ(findings[0].field, 5);
  EXPECT_EQ(findings[0].rule_id, "minimum-field-missing");
}

TEST(ValidateMinimumTest, BlankLocationCountsAsMissing) {
  ClimateCard card = ReferenceCard();
  card.location = "   ";
  const auto findings = ValidateMinimum(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].field, 5);
}

TEST(ValidateMinimumTest, EveryMissingFieldReported) {
  ClimateCard card;
  card.model_name = "empty";
  const auto findings = ValidateMinimum(card);
  ASSERT_EQ(findings.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(findings[i].field, i + 1);
    EXPECT_EQ(findings[i].severity, Severity::kError);
  }
}

TEST(ValidateMinimumTest, TotalShorterThanFinal) {
  ClimateCard card = ReferenceCard();
  card.final_training_duration = Hours(10);
  card.total_duration = Hours(8);
  const auto findings = ValidateMinimum(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].severity, Severity::kError);
  EXPECT_EQ(findings[0].principle, Principle::kConsistency);
  EXPECT_EQ(findings[0].rule_id, "duration-order");
}

TEST(ValidateExtendedTest, DisplayRoundedValueWithinTightTolerance) {
  ClimateCard card = ReferenceCard();
  card.final_emissions->emissions = GramsCO2e(2630);  // "2.63 kg"
  const auto findings = ValidateExtended(card, 0.01);
  EXPECT_EQ(CountPrinciple(findings, Principle::kConsistency), 0u);
}

TEST(ValidateExtendedTest, FiveKilogramsIsInconsistent) {
  ClimateCard card = ReferenceCard();
  card.final_emissions->emissions = GramsCO2e(5000);
  const auto findings = ValidateExtended(card, 0.01);
  ASSERT_EQ(CountPrinciple(findings, Principle::kConsistency), 1u);
  const auto it = std::find_if(findings.begin(), findings.end(), [](const LintFinding& f) {
    return f.principle == Principle::kConsistency;
  });
  EXPECT_EQ(it->severity, Severity::kWarning);
  EXPECT_EQ(it->field, 7);
  EXPECT_NE(it->message.find("5000"), std::string::npos) << it->message;
  EXPECT_NE(it->message.find("2632"), std::string::npos) << it->message;
}

TEST(ValidateExtendedTest, ThousandfoldUnitErrorCaught) {
  ClimateCard card = ReferenceCard();
  card.final_emissions->emissions = GramsCO2e(2632000);
  const auto findings = Validate(card);
  EXPECT_EQ(Count(findings, Severity::kError), 0u);
  ASSERT_EQ(Count(findings, Severity::kWarning, "emission-mismatch"), 1u);
  EXPECT_EQ(CountPrinciple(findings, Principle::kConsistency), 1u);
}

TEST(ValidateExtendedTest, MissingMixWarnsOnFieldSix) {
  ClimateCard card = ReferenceCard();
  card.mix.reset();
  const auto findings = ValidateExtended(card);
  const auto it = std::find_if(findings.begin(), findings.end(), [](const LintFinding& f) {
    return f.field == 6;
  });
  ASSERT_NE(it, findings.end());
  EXPECT_EQ(it->severity, Severity::kWarning);
  EXPECT_EQ(it->principle, Principle::kCompleteness);
}

TEST(ValidateExtendedTest, ConfidenceNotesForBareEstimates) {
  ClimateCard card = ReferenceCard();
  EXPECT_EQ(Count(ValidateExtended(card), Severity::kInfo, "confidence-missing"), 3u);
  card.total_duration_bounds = UncertaintyBounds(0.8, 1.25);
  card.total_emissions->uncertainty = card.total_duration_bounds;
  card.final_emissions->bias_note = BiasNote::kLikelyOverestimate;
  EXPECT_EQ(Count(ValidateExtended(card), Severity::kInfo, "confidence-missing"), 1u);
}

TEST(ValidateExtendedTest, ZeroComputedEmissions) {
  ClimateCard card = ReferenceCard();
  card.final_training_duration = Hours(0);
  card.final_emissions->emissions = GramsCO2e(0);
  EXPECT_EQ(CountPrinciple(ValidateExtended(card), Principle::kConsistency), 0u);
  card.final_emissions->emissions = GramsCO2e(1);
  EXPECT_EQ(CountPrinciple(ValidateExtended(card), Principle::kConsistency), 1u);
}

TEST(ValidateTest, StrictEscalatesWarnings) {
  ClimateCard card = ReferenceCard();
  card.comments.reset();
  EXPECT_FALSE(HasErrors(Validate(card)));
  EXPECT_TRUE(HasErrors(Validate(card, {.strict = true})));
  EXPECT_FALSE(HasErrors(Validate(ReferenceCard(), {.strict = true})));
}

TEST(ValidateTest, ExtendedChecksSkippedWhenMinimumFails) {
  ClimateCard card = ReferenceCard();
  card.power.reset();
  card.final_emissions->emissions = GramsCO2e(1);
  const auto findings = Validate(card);
  EXPECT_EQ(Count(findings, Severity::kError), 1u);
  EXPECT_EQ(Count(findings, Severity::kWarning, "emission-mismatch"), 0u);
}

TEST(ValidateTest, IdempotentAndPure) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> grams(0.0, 10000.0);
  for (int trial = 0; trial < 100; ++trial) {
    ClimateCard card = ReferenceCard();
    card.final_emissions->emissions = GramsCO2e(grams(rng));
    if (trial % 3 == 0) card.location.reset();
    if (trial % 4 == 0) card.comments = "We are carbon neutral thanks to offsetting.";
    const ClimateCard copy = card;
    const auto first = Validate(card);
    EXPECT_EQ(Validate(card), first);
    EXPECT_EQ(card, copy);
  }
}

TEST(FormatFindingTest, Layout) {
  ClimateCard card = ReferenceCard();
  card.location.reset();
  EXPECT_EQ(FormatFinding(ValidateMinimum(card).at(0)).rfind(
                "error [completeness] minimum-field-missing (field 5, location): ", 0),
            0u);
}

TEST(OffsetLintTest, Examples) {
  ClimateCard card = ReferenceCard();
  card.comments = "we purchased offsets";
  EXPECT_EQ(LintOffsetClaims(card).size(), 1u);
  card.comments.reset();
  card.positive_impact.reset();
  EXPECT_TRUE(LintOffsetClaims(card).empty());
  card.comments = "training is energy intensive";
  EXPECT_TRUE(LintOffsetClaims(card).empty());
  card.comments = "we offset our emissions";
  const auto findings = LintOffsetClaims(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].severity, Severity::kWarning);
  EXPECT_EQ(findings[0].rule_id, "offset-claim");
  EXPECT_EQ(findings[0].field, 11);
  EXPECT_NE(findings[0].message.find("offsetting"), std::string::npos);
}

TEST(OffsetLintTest, CleanReferenceCard) { EXPECT_TRUE(LintOffsetClaims(ReferenceCard()).empty()); }

TEST(OffsetLintTest, OverlappingPhrasesCountOnce) {
  ClimateCard card = ReferenceCard();
  card.comments = "Offsetting made us CARBON\n NEUTRAL and net zero.";
  EXPECT_EQ(LintOffsetClaims(card).size(), 3u);
  card.comments.reset();
  card.positive_impact->text = "climate neutral";
  const auto findings = LintOffsetClaims(card);
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].field, 10);
}

CardInputs ReferenceInputs() {
  CardInputs inputs;
  inputs.model_name = "ClimateBert";
  inputs.is_public = true;
  inputs.final_training_duration = Hours(8);
  inputs.total_duration = Hours(288);
  inputs.power = Watts(700);
  inputs.location = "Germany";
  inputs.inference = CardInputs::InferenceRun{Hours(0.187), 100000};
  return inputs;
}

TEST(DeriveCardTest, ReproducesReferenceCard) {
  const ClimateCard card = DeriveCard(ReferenceInputs(), BuiltInMixRegistry());
  ASSERT_TRUE(card.mix);
  EXPECT_EQ(card.mix->value(), 470.0);
  EXPECT_EQ(card.final_emissions->emissions.value(), 2632.0);
  EXPECT_EQ(card.total_emissions->emissions.value(), 94752.0);
  EXPECT_NEAR(card.inference_per_sample->emissions.value(), 6.1523e-4, 6.1523e-16);
  EXPECT_EQ(FormatMass(card.final_emissions->emissions), "2.63 kg");
  EXPECT_EQ(FormatMass(card.total_emissions->emissions), "94.75 kg");
  EXPECT_EQ(FormatMass(card.inference_per_sample->emissions), "0.62 mg");
  EXPECT_EQ(card.final_emissions->scope, ScopeLabel::kOwnExperiments);
  EXPECT_FALSE(card.final_emissions->bias_note);
}

TEST(DeriveCardTest, ZeroDurations) {
  CardInputs inputs = ReferenceInputs();
  inputs.final_training_duration = Hours(0);
  inputs.total_duration = Hours(0);
  inputs.inference.reset();
  const ClimateCard card = DeriveCard(inputs, BuiltInMixRegistry());
  EXPECT_EQ(card.final_emissions->emissions.value(), 0.0);
  EXPECT_EQ(card.total_emissions->emissions.value(), 0.0);
  EXPECT_FALSE(card.inference_per_sample);
}

TEST(DeriveCardTest, UnknownLocation) {
  CardInputs inputs = ReferenceInputs();
  inputs.location = "Atlantis";
  const ClimateCard card = DeriveCard(inputs, BuiltInMixRegistry());
  EXPECT_FALSE(card.mix);
  EXPECT_FALSE(card.final_emissions);
  EXPECT_FALSE(card.total_emissions);
  EXPECT_FALSE(card.inference_per_sample);
  EXPECT_TRUE(ValidateMinimum(card).empty());
  const auto findings = ValidateExtended(card);
  EXPECT_TRUE(std::any_of(findings.begin(), findings.end(), [](const LintFinding& f) {
    return f.field == 6 && f.principle == Principle::kCompleteness;
  }));
  EXPECT_THROW(DeriveCard(inputs, BuiltInMixRegistry(), /*strict=*/true), NotFoundError);
}

TEST(DeriveCardTest, RigPowerIsMarkedOverestimate) {
  CardInputs inputs = ReferenceInputs();
  const HardwareSpec& a5000 = BuiltInHardwareRegistry().Lookup("NVIDIA RTX A5000");
  inputs.power = RigDescription({{a5000, 2}}, Watts(120));
  const ClimateCard card = DeriveCard(inputs, BuiltInMixRegistry());
  EXPECT_EQ(card.power->value(), 580.0);
  EXPECT_EQ(card.final_emissions->bias_note, BiasNote::kLikelyOverestimate);
  EXPECT_EQ(card.total_emissions->bias_note, BiasNote::kLikelyOverestimate);
}

TEST(DeriveCardTest, MixOverrideAndYear) {
  CardInputs inputs = ReferenceInputs();
  inputs.location = "Nowhere";
  inputs.mix_override = GramsPerKwh(100);
  EXPECT_EQ(DeriveCard(inputs, BuiltInMixRegistry()).final_emissions->emissions.value(), 560.0);

  std::istringstream csv(
      "location,gco2eq_per_kwh,source,year\nGermany,500,a,2018\nGermany,470,b,2020\n");
  const MixRegistry registry = LoadMixCsv(csv);
  inputs = ReferenceInputs();
  inputs.mix_year = 2019;
  EXPECT_EQ(DeriveCard(inputs, registry).mix->value(), 500.0);
}

TEST(DeriveCardTest, SelfConsistent) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> exponent(-3.0, 4.0), watts(0.0, 5000.0);
  const auto locations = BuiltInMixRegistry().locations();
  std::uniform_int_distribution<std::size_t> pick(0, locations.size() - 1);
  for (double tolerance : {1e-12, 0.01, 0.05}) {
    for (int trial = 0; trial < 500; ++trial) {
      CardInputs inputs = ReferenceInputs();
      const double final_hours = std::pow(10.0, exponent(rng));
      inputs.final_training_duration = Hours(final_hours);
      inputs.total_duration = Hours(final_hours * (1.0 + std::pow(10.0, exponent(rng))));
      inputs.power = Watts(watts(rng));
      inputs.location = locations[pick(rng)];
      const ClimateCard card = DeriveCard(inputs, BuiltInMixRegistry());
      const auto findings = ValidateExtended(card, tolerance);
      EXPECT_EQ(CountPrinciple(findings, Principle::kConsistency), 0u);
    }
  }
}

TEST(DeriveCardTest, ScalingDurationsScalesEmissions) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> hours(0.0, 1000.0), watts(0.0, 3000.0);
  for (double k : {0.5, 2.0, 3.0, 10.0, 0.1}) {
    for (int trial = 0; trial < 300; ++trial) {
      CardInputs inputs = ReferenceInputs();
      const double final_hours = hours(rng);
      inputs.final_training_duration = Hours(final_hours);
      inputs.total_duration = Hours(final_hours + hours(rng));
      inputs.power = Watts(watts(rng));
      CardInputs scaled = inputs;
      scaled.final_training_duration = inputs.final_training_duration * k;
      scaled.total_duration = inputs.total_duration * k;
      scaled.inference->batch_duration = inputs.inference->batch_duration * k;
      const ClimateCard base = DeriveCard(inputs, BuiltInMixRegistry());
      const ClimateCard big = DeriveCard(scaled, BuiltInMixRegistry());
      const auto check = [k](const std::optional<EmissionEstimate>& a,
                             const std::optional<EmissionEstimate>& b) {
        const double expected = k * a->emissions.value();
        const double actual = b->emissions.value();
        if (std::ldexp(1.0, std::ilogb(k)) == k) {
          // Power-of-two factors commute with every rounding step.
          EXPECT_EQ(actual, expected);
        } else {
          const double ulp =
              std::nextafter(expected, std::numeric_limits<double>::infinity()) - expected;
          EXPECT_LE(std::fabs(actual - expected), 4 * ulp);
        }
      };
      check(base.final_emissions, big.final_emissions);
      check(base.total_emissions, big.total_emissions);
      check(base.inference_per_sample, big.inference_per_sample);
    }
  }
}

}  // namespace
}  // namespace climatecard
