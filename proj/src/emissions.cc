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

#include "climatecard/emissions.h"

#include <cmath>
#include <string>
#include <vector>

namespace climatecard {
namespace {

GramsCO2e CheckedGrams(double grams) {
  if (!std::isfinite(grams)) {
    throw InvalidResultError("emission estimate overflowed: inputs too large");
  }
  return GramsCO2e(grams);
}

}  // namespace

InferenceProfile::InferenceProfile(Hours batch_duration, Kilowatts power, GramsPerKwh mix,
                                   std::int64_t sample_count)
    : batch_duration_(batch_duration), power_(power), mix_(mix), sample_count_(sample_count) {
  if (sample_count < 1) {
    throw InvalidQuantityError("sample count must be at least 1, got " +
                               std::to_string(sample_count));
  }
}

UncertaintyBounds::UncertaintyBounds(double low_factor, double high_factor)
    : low_(low_factor), high_(high_factor) {
  if (!(std::isfinite(low_) && std::isfinite(high_) && low_ > 0.0 && low_ <= 1.0 &&
        high_ >= 1.0)) {
    throw InvalidQuantityError("uncertainty bounds must satisfy 0 < low <= 1 <= high, got [" +
                               FormatNumber(low_) + ", " + FormatNumber(high_) + "]");
  }
}

std::string_view ToString(BiasNote note) {
  switch (note) {
    case BiasNote::kLikelyOverestimate:
      return "likely_overestimate";
    case BiasNote::kLikelyUnderestimate:
      return "likely_underestimate";
    case BiasNote::kUnknown:
      break;
  }
  return "unknown";
}

GramsCO2e TrainingEmissions(const TrainingProfile& profile) {
  return CheckedGrams(profile.duration.value() * profile.power.value() * profile.mix.value());
}

GramsCO2e TotalEmissions(std::span<const TrainingProfile> profiles) {
  std::vector<double> grams;
  grams.reserve(profiles.size());
  for (const auto& profile : profiles) grams.push_back(TrainingEmissions(profile).value());
  return CheckedGrams(ExactSum(grams));
}

GramsCO2e InferenceEmissionsPerSample(const InferenceProfile& profile) {
  const double per_sample_hours =
      profile.batch_duration().value() / static_cast<double>(profile.sample_count());
  return CheckedGrams(per_sample_hours * profile.power().value() * profile.mix().value());
}

std::pair<GramsCO2e, GramsCO2e> ApplyUncertainty(GramsCO2e emissions,
                                                 const UncertaintyBounds& bounds) {
  return {CheckedGrams(emissions.value() * bounds.low_factor()),
          CheckedGrams(emissions.value() * bounds.high_factor())};
}

double ExactSum(std::span<const double> values) {
  // Non-overlapping partials whose exact sum equals the running total.
  std::vector<double> partials;
  for (double x : values) {
    std::size_t used = 0;
    for (double y : partials) {
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      if (!std::isfinite(hi)) throw InvalidResultError("sum overflowed");
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[used++] = lo;
      x = hi;
    }
    partials.resize(used);
    partials.push_back(x);
  }

  std::size_t n = partials.size();
  if (n == 0) return 0.0;
  double hi = partials[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials[--n];
    hi = x + y;
    lo = y - (hi - x);
    if (lo != 0.0) break;
  }
  // Half-way case: make the final rounding agree with the remaining partials.
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) || (lo > 0.0 && partials[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

}  // namespace climatecard
