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

#include "climatecard/energy_mix.h"

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "climatecard/error.h"
#include "climatecard/text.h"
#include "csv.h"

namespace climatecard {

extern const std::string_view kBuiltInEnergyMixCsv;

namespace {

std::string At(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

void MixRegistry::Add(EnergyMixRecord record, int line) {
  record.location = CanonicalKey(record.location);
  if (record.location.empty()) throw Error("energy mix record has an empty location");
  if (record.year < kMinYear || record.year > kMaxYear) {
    throw Error("energy mix year " + std::to_string(record.year) + " outside [" +
                std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]");
  }
  auto key = std::make_pair(record.location, record.year);
  if (auto it = records_.find(key); it != records_.end()) {
    throw ParseError("duplicate energy mix entry (" + record.location + ", " +
                         std::to_string(record.year) + ") on lines " +
                         std::to_string(it->second.line) + " and " + std::to_string(line),
                     line);
  }
  records_.emplace(std::move(key), Entry{std::move(record), line});
}

const EnergyMixRecord& MixRegistry::Lookup(std::string_view location,
                                           std::optional<int> year) const {
  const std::string key = CanonicalKey(location);
  auto first = records_.lower_bound({key, std::numeric_limits<int>::min()});
  auto last = records_.upper_bound({key, std::numeric_limits<int>::max()});
  if (first == last) {
    const auto known = locations();
    auto suggestions = ClosestMatches(key, known);
    std::string message = "unknown location '" + std::string(location) + "'";
    if (!suggestions.empty()) message += "; closest: " + Join(suggestions, ", ");
    throw NotFoundError(message, std::move(suggestions));
  }
  if (!year) return std::prev(last)->second.record;

  const EnergyMixRecord* best = nullptr;
  for (auto it = first; it != last && it->first.second <= *year; ++it) best = &it->second.record;
  if (best == nullptr) {
    throw NotFoundError("no energy mix for '" + key + "' in or before " + std::to_string(*year) +
                        "; earliest is " + std::to_string(first->first.second));
  }
  return *best;
}

std::vector<EnergyMixRecord> MixRegistry::records() const {
  std::vector<EnergyMixRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, entry] : records_) out.push_back(entry.record);
  return out;
}

std::vector<std::string> MixRegistry::locations() const {
  std::vector<std::string> out;
  for (const auto& [key, entry] : records_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

MixRegistry LoadMixCsv(std::istream& in) {
  MixRegistry registry;
  for (const auto& row : internal::ReadCsv(in, kMixCsvHeader)) {
    if (CanonicalKey(row.fields[0]).empty()) {
      throw ParseError(At(row.line, 1) + ": empty location", row.line, 1);
    }
    const auto intensity = internal::ParseDouble(row.fields[1]);
    if (!intensity) {
      throw ParseError(At(row.line, 2) + ": intensity '" + row.fields[1] + "' is not a number",
                       row.line, 2);
    }
    const auto year = internal::ParseInteger(row.fields[3]);
    if (!year) {
      throw ParseError(At(row.line, 4) + ": year '" + row.fields[3] + "' is not an integer",
                       row.line, 4);
    }
    if (*year < kMinYear || *year > kMaxYear) {
      throw ParseError(At(row.line, 4) + ": year " + std::to_string(*year) + " outside [" +
                           std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]",
                       row.line, 4);
    }
    GramsPerKwh checked_intensity;
    try {
      checked_intensity = GramsPerKwh(*intensity);
    } catch (const InvalidQuantityError& e) {
      throw ParseError(At(row.line, 2) + ": " + e.what(), row.line, 2);
    }
    registry.Add(EnergyMixRecord{row.fields[0], checked_intensity,
                                 std::string(internal::TrimField(row.fields[2])),
                                 static_cast<int>(*year)},
                 row.line);
  }
  return registry;
}

MixRegistry LoadMixCsvFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open energy mix file " + path.string());
  try {
    return LoadMixCsv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

const MixRegistry& BuiltInMixRegistry() {
  static const MixRegistry registry = [] {
    std::istringstream in{std::string(kBuiltInEnergyMixCsv)};
    return LoadMixCsv(in);
  }();
  return registry;
}

std::string WriteMixCsv(const MixRegistry& registry) {
  std::string out = std::string(kMixCsvHeader) + "\n";
  for (const auto& record : registry.records()) {
    out += internal::CsvField(record.location) + "," + FormatNumber(record.intensity.value()) +
           "," + internal::CsvField(record.source) + "," + std::to_string(record.year) + "\n";
  }
  return out;
}

}  // namespace climatecard
