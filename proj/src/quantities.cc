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

#include "climatecard/quantities.h"

#include <array>
#include <charconv>
#include <string>
#include <system_error>

namespace climatecard {
namespace {

// Numeral in a unit = grams * multiplier / divisor; both are exact powers of
// ten so each conversion is a single correctly rounded operation.
struct MassUnit {
  std::string_view name;
  double multiplier;
  double divisor;
};

constexpr std::array<MassUnit, 4> kMassUnits = {{
    {"mg", 1e3, 1.0},
    {"g", 1.0, 1.0},
    {"kg", 1.0, 1e3},
    {"t", 1.0, 1e6},
}};

std::string ToChars(double value, std::chars_format format) {
  // Fixed notation of a double needs at most ~330 characters.
  std::array<char, 400> buffer;
  auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, format);
  if (ec != std::errc()) throw InvalidResultError("cannot format number");
  return std::string(buffer.data(), end);
}

double Scale(double grams, const MassUnit& unit) {
  return grams * unit.multiplier / unit.divisor;
}

}  // namespace

Kilowatts WattsToKilowatts(Watts power) { return Kilowatts(power.value() / 1000.0); }

Watts KilowattsToWatts(Kilowatts power) { return Watts(power.value() * 1000.0); }

std::string FormatNumber(double value) {
  return ToChars(value, std::chars_format::general);
}

std::string RoundDecimal(double value, int decimals) {
  const bool negative = std::signbit(value) && value != 0.0;
  std::string text = ToChars(std::fabs(value), std::chars_format::fixed);

  std::string whole = text;
  std::string fraction;
  if (auto dot = text.find('.'); dot != std::string::npos) {
    whole = text.substr(0, dot);
    fraction = text.substr(dot + 1);
  }
  const bool round_up =
      static_cast<int>(fraction.size()) > decimals && fraction[decimals] >= '5';
  fraction.resize(decimals, '0');

  std::string digits = whole + fraction;
  if (round_up) {
    int i = static_cast<int>(digits.size()) - 1;
    for (; i >= 0; --i) {
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
    }
    if (i < 0) digits.insert(digits.begin(), '1');
  }

  std::string result = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) result += "." + digits.substr(digits.size() - decimals);
  const bool all_zero = result.find_first_not_of("0.") == std::string::npos;
  if (negative && !all_zero) result.insert(result.begin(), '-');
  return result;
}

std::string FormatMass(GramsCO2e mass) {
  const double grams = mass.value();
  if (grams == 0.0) return "0.00 g";

  std::size_t unit = 0;
  for (std::size_t i = kMassUnits.size(); i-- > 0;) {
    if (Scale(grams, kMassUnits[i]) >= 1.0) {
      unit = i;
      break;
    }
  }
  std::string numeral = RoundDecimal(Scale(grams, kMassUnits[unit]), 2);
  // 999.996 g rounds to "1000.00"; show it as "1.00 kg" instead.
  if (numeral == "1000.00" && unit + 1 < kMassUnits.size()) {
    ++unit;
    numeral = RoundDecimal(Scale(grams, kMassUnits[unit]), 2);
  }
  return numeral + " " + std::string(kMassUnits[unit].name);
}

std::string FormatHours(Hours hours) {
  return FormatNumber(hours.value()) + (hours.value() == 1.0 ? " hour" : " hours");
}

std::string FormatPower(Watts power) {
  return FormatNumber(WattsToKilowatts(power).value()) + " kW";
}

}  // namespace climatecard
