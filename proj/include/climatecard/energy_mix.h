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

// Carbon intensity of electricity by location.
//
// CSV format (UTF-8, `#` lines ignored):
//
//   location,gco2eq_per_kwh,source,year
//   Germany,470,UBA,2020

#ifndef CLIMATECARD_ENERGY_MIX_H_
#define CLIMATECARD_ENERGY_MIX_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "climatecard/quantities.h"

namespace climatecard {

inline constexpr std::string_view kMixCsvHeader = "location,gco2eq_per_kwh,source,year";
inline constexpr int kMinYear = 1950;
inline constexpr int kMaxYear = 2100;

struct EnergyMixRecord {
  std::string location;  // canonical form, see CanonicalKey()
  GramsPerKwh intensity;
  std::string source;
  int year = 0;

  friend bool operator==(const EnergyMixRecord&, const EnergyMixRecord&) = default;
};

// Immutable once built; keyed by (canonical location, year).
class MixRegistry {
 public:
  // Canonicalizes the location and validates the year. Throws Error on an
  // invalid record and ParseError naming both lines on a duplicate key.
  void Add(EnergyMixRecord record, int line = 0);

  // With `year`, the record with the greatest year <= `year`; without, the
  // latest record. Throws NotFoundError, suggesting the three closest known
  // locations when the location itself is unknown.
  const EnergyMixRecord& Lookup(std::string_view location,
                                std::optional<int> year = std::nullopt) const;

  // All records ordered by (location, year).
  std::vector<EnergyMixRecord> records() const;
  std::vector<std::string> locations() const;
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

 private:
  struct Entry {
    EnergyMixRecord record;
    int line;
  };
  std::map<std::pair<std::string, int>, Entry> records_;
};

// Throws ParseError with line and column on malformed input.
MixRegistry LoadMixCsv(std::istream& in);
MixRegistry LoadMixCsvFile(const std::filesystem::path& path);

// The table compiled into the library from data/energy_mix.csv.
const MixRegistry& BuiltInMixRegistry();

// Canonical CSV rendering of a registry, header included.
std::string WriteMixCsv(const MixRegistry& registry);

}  // namespace climatecard

#endif  // CLIMATECARD_ENERGY_MIX_H_
