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

// Emission estimates for training and inference:
//
//   grams CO2eq = hours x kW x gCO2eq/kWh
//
// and, for inference over a dataset of n samples, the same product with the
// duration divided by n.

#ifndef CLIMATECARD_EMISSIONS_H_
#define CLIMATECARD_EMISSIONS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "climatecard/quantities.h"
#include "climatecard/taxonomy.h"

namespace climatecard {

struct TrainingProfile {
  Hours duration;
  Kilowatts power;
  GramsPerKwh mix;
};

class InferenceProfile {
 public:
  // Throws InvalidQuantityError if `sample_count` < 1.
  InferenceProfile(Hours batch_duration, Kilowatts power, GramsPerKwh mix,
                   std::int64_t sample_count);

  Hours batch_duration() const { return batch_duration_; }
  Kilowatts power() const { return power_; }
  GramsPerKwh mix() const { return mix_; }
  std::int64_t sample_count() const { return sample_count_; }

 private:
  Hours batch_duration_;
  Kilowatts power_;
  GramsPerKwh mix_;
  std::int64_t sample_count_;
};

// Multiplicative confidence interval: 0 < low <= 1 <= high.
class UncertaintyBounds {
 public:
  // Throws InvalidQuantityError when the ordering or positivity fails.
  UncertaintyBounds(double low_factor, double high_factor);

  double low_factor() const { return low_; }
  double high_factor() const { return high_; }

  friend bool operator==(const UncertaintyBounds&, const UncertaintyBounds&) = default;

 private:
  double low_;
  double high_;
};

enum class BiasNote { kLikelyOverestimate, kLikelyUnderestimate, kUnknown };

std::string_view ToString(BiasNote note);

struct EmissionEstimate {
  GramsCO2e emissions;
  std::optional<UncertaintyBounds> uncertainty;
  std::optional<BiasNote> bias_note;
  ScopeLabel scope = ScopeLabel::kOwnExperiments;

  friend bool operator==(const EmissionEstimate&, const EmissionEstimate&) = default;
};

// duration x power x mix. Throws InvalidResultError on overflow.
GramsCO2e TrainingEmissions(const TrainingProfile& profile);

// Sum of TrainingEmissions over `profiles`, correctly rounded, so the result
// does not depend on the order of the list. Empty input yields 0 g.
GramsCO2e TotalEmissions(std::span<const TrainingProfile> profiles);

// (batch_duration / sample_count) x power x mix.
GramsCO2e InferenceEmissionsPerSample(const InferenceProfile& profile);

// (e x low, e x high).
std::pair<GramsCO2e, GramsCO2e> ApplyUncertainty(GramsCO2e emissions,
                                                 const UncertaintyBounds& bounds);

// Correctly rounded sum of finite doubles (Shewchuk's partials algorithm).
// Throws InvalidResultError if an intermediate sum overflows.
double ExactSum(std::span<const double> values);

}  // namespace climatecard

#endif  // CLIMATECARD_EMISSIONS_H_
