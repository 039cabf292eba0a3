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

// Unit-tagged scalar types. Every quantity is a non-negative finite double;
// the invariant is enforced once, at construction.

#ifndef CLIMATECARD_QUANTITIES_H_
#define CLIMATECARD_QUANTITIES_H_

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

#include "climatecard/error.h"

namespace climatecard {

template <typename Tag>
class Quantity {
 public:
  constexpr Quantity() = default;

  // Throws InvalidQuantityError unless `value` is finite and >= 0.
  explicit Quantity(double value) : value_(Checked(value)) {}

  double value() const { return value_; }
  static constexpr std::string_view unit() { return Tag::kUnit; }

  friend Quantity operator+(Quantity a, Quantity b) {
    return Quantity(a.value_ + b.value_);
  }
  Quantity& operator+=(Quantity other) { return *this = *this + other; }

  // Scaling by a non-negative finite factor.
  friend Quantity operator*(Quantity q, double factor) {
    return Quantity(q.value_ * factor);
  }
  friend Quantity operator*(double factor, Quantity q) { return q * factor; }

  friend auto operator<=>(Quantity, Quantity) = default;

 private:
  static double Checked(double value) {
    if (!std::isfinite(value) || value < 0) {
      throw InvalidQuantityError("invalid quantity " + std::to_string(value) + " " +
                                 std::string(Tag::kUnit) +
                                 ": must be finite and non-negative");
    }
    return value + 0.0;  // folds -0.0 into +0.0
  }

  double value_ = 0.0;
};

struct HoursTag {
  static constexpr std::string_view kUnit = "h";
};
struct WattsTag {
  static constexpr std::string_view kUnit = "W";
};
struct KilowattsTag {
  static constexpr std::string_view kUnit = "kW";
};
struct GramsPerKwhTag {
  static constexpr std::string_view kUnit = "gCO2eq/kWh";
};
struct GramsCO2eTag {
  static constexpr std::string_view kUnit = "g";
};

using Hours = Quantity<HoursTag>;
using Watts = Quantity<WattsTag>;
using Kilowatts = Quantity<KilowattsTag>;
using GramsPerKwh = Quantity<GramsPerKwhTag>;
using GramsCO2e = Quantity<GramsCO2eTag>;

Kilowatts WattsToKilowatts(Watts power);
Watts KilowattsToWatts(Kilowatts power);

// Renders a mass as "<numeral> <unit>" with unit mg, g, kg or t. The largest
// unit whose numeral is >= 1 is chosen, and the numeral is rounded half away
// from zero to two decimals. Zero renders as "0.00 g".
std::string FormatMass(GramsCO2e mass);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatNumber(double value);

// Rounds the decimal expansion of `value` half away from zero to `decimals`
// places. Ties are decided on the shortest round-trip decimal form, so
// 2.675 rounds to 2.68 even though its binary value is slightly below.
std::string RoundDecimal(double value, int decimals);

// "8 hours", "1 hour", "0.5 hours".
std::string FormatHours(Hours hours);

// "0.7 kW"; power is always displayed in kilowatts.
std::string FormatPower(Watts power);

}  // namespace climatecard

#endif  // CLIMATECARD_QUANTITIES_H_
