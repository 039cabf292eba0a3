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

#include "climatecard/hardware.h"

#include <fstream>
#include <sstream>

#include "climatecard/emissions.h"
#include "climatecard/error.h"
#include "climatecard/text.h"
#include "csv.h"
#include "json.hpp"

namespace climatecard {

extern const std::string_view kBuiltInHardwareCsv;

namespace {

std::string At(int line, int column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view ToString(HardwareKind kind) {
  switch (kind) {
    case HardwareKind::kGpu:
      return "gpu";
    case HardwareKind::kCpu:
      return "cpu";
    case HardwareKind::kOther:
      break;
  }
  return "other";
}

std::optional<HardwareKind> ParseHardwareKind(std::string_view text) {
  const std::string key = CanonicalKey(text);
  if (key == "gpu") return HardwareKind::kGpu;
  if (key == "cpu") return HardwareKind::kCpu;
  if (key == "other") return HardwareKind::kOther;
  return std::nullopt;
}

RigDescription::RigDescription(std::vector<RigComponent> components, Watts overhead)
    : components_(std::move(components)), overhead_(overhead) {
  for (const auto& component : components_) {
    if (component.count < 1) {
      throw Error("component '" + component.spec.display_name + "' has count " +
                  std::to_string(component.count) + "; counts must be >= 1");
    }
  }
}

Watts PeakPower(const RigDescription& rig) {
  std::vector<double> terms;
  terms.reserve(rig.components().size() + 1);
  for (const auto& component : rig.components()) {
    terms.push_back(component.spec.tdp.value() * component.count);
  }
  terms.push_back(rig.overhead().value());
  return Watts(ExactSum(terms));
}

void HardwareRegistry::Add(HardwareSpec spec, int line) {
  if (spec.display_name.empty()) spec.display_name = spec.name;
  spec.name = CanonicalKey(spec.name);
  if (spec.name.empty()) throw Error("hardware entry has an empty name");
  if (auto it = specs_.find(spec.name); it != specs_.end()) {
    throw ParseError("duplicate hardware entry '" + spec.name + "' on lines " +
                         std::to_string(it->second.line) + " and " + std::to_string(line),
                     line);
  }
  std::string key = spec.name;
  specs_.emplace(std::move(key), Entry{std::move(spec), line});
}

const HardwareSpec& HardwareRegistry::Lookup(std::string_view name) const {
  const std::string key = CanonicalKey(name);
  if (auto it = specs_.find(key); it != specs_.end()) return it->second.spec;

  std::vector<std::string> names;
  for (const auto& [known, entry] : specs_) names.push_back(known);
  auto suggestions = ClosestMatches(key, names);
  std::string message = "unknown hardware '" + std::string(name) + "'";
  if (!suggestions.empty()) message += "; closest: " + Join(suggestions, ", ");
  throw NotFoundError(message, std::move(suggestions));
}

std::vector<HardwareSpec> HardwareRegistry::specs() const {
  std::vector<HardwareSpec> out;
  out.reserve(specs_.size());
  for (const auto& [key, entry] : specs_) out.push_back(entry.spec);
  return out;
}

HardwareRegistry LoadHardwareCsv(std::istream& in) {
  HardwareRegistry registry;
  for (const auto& row : internal::ReadCsv(in, kHardwareCsvHeader)) {
    const std::string display(internal::TrimField(row.fields[0]));
    if (display.empty()) throw ParseError(At(row.line, 1) + ": empty name", row.line, 1);
    const auto tdp = internal::ParseDouble(row.fields[1]);
    if (!tdp) {
      throw ParseError(At(row.line, 2) + ": TDP '" + row.fields[1] + "' is not a number",
                       row.line, 2);
    }
    Watts watts;
    try {
      watts = Watts(*tdp);
    } catch (const InvalidQuantityError& e) {
      throw ParseError(At(row.line, 2) + ": " + e.what(), row.line, 2);
    }
    const auto kind = ParseHardwareKind(row.fields[2]);
    if (!kind) {
      throw ParseError(At(row.line, 3) + ": kind '" + row.fields[2] +
                           "' is not one of gpu, cpu, other",
                       row.line, 3);
    }
    registry.Add(HardwareSpec{display, display, watts, *kind}, row.line);
  }
  return registry;
}

HardwareRegistry LoadHardwareCsvFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open hardware file " + path.string());
  try {
    return LoadHardwareCsv(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

const HardwareRegistry& BuiltInHardwareRegistry() {
  static const HardwareRegistry registry = [] {
    std::istringstream in{std::string(kBuiltInHardwareCsv)};
    return LoadHardwareCsv(in);
  }();
  return registry;
}

std::string WriteHardwareCsv(const HardwareRegistry& registry) {
  std::string out = std::string(kHardwareCsvHeader) + "\n";
  for (const auto& spec : registry.specs()) {
    out += internal::CsvField(spec.display_name) + "," + FormatNumber(spec.tdp.value()) + "," +
           std::string(ToString(spec.kind)) + "\n";
  }
  return out;
}

RigDescription LoadRigJson(std::istream& in, const HardwareRegistry& registry) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("rig file: ") + e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("rig file: expected a JSON object", 0);

  try {
    std::vector<RigComponent> components;
    for (const auto& item : doc.value("components", nlohmann::json::array())) {
      const std::string name = item.at("name").get<std::string>();
      const int count = item.value("count", 1);
      HardwareSpec spec;
      if (item.contains("tdp_watts")) {
        const auto kind = ParseHardwareKind(item.value("kind", std::string("other")));
        if (!kind) throw ParseError("rig file: component '" + name + "' has an invalid kind", 0);
        spec = HardwareSpec{CanonicalKey(name), name, Watts(item.at("tdp_watts").get<double>()),
                            *kind};
      } else {
        spec = registry.Lookup(name);
      }
      components.push_back(RigComponent{std::move(spec), count});
    }
    return RigDescription(std::move(components), Watts(doc.value("overhead_watts", 0.0)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rig file: ") + e.what(), 0);
  } catch (const InvalidQuantityError& e) {
    throw ParseError(std::string("rig file: ") + e.what(), 0);
  }
}

RigDescription LoadRigJsonFile(const std::filesystem::path& path,
                               const HardwareRegistry& registry) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rig file " + path.string());
  return LoadRigJson(in, registry);
}

}  // namespace climatecard
