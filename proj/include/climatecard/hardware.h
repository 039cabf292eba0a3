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

// Hardware thermal design power (TDP) table and peak-power estimates.
//
// The sum of component TDPs is an upper-bound proxy for the power drawn
// while training, so estimates built on it are flagged as likely
// overestimates.

#ifndef CLIMATECARD_HARDWARE_H_
#define CLIMATECARD_HARDWARE_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "climatecard/quantities.h"

namespace climatecard {

inline constexpr std::string_view kHardwareCsvHeader = "name,tdp_watts,kind";

enum class HardwareKind { kGpu, kCpu, kOther };

std::string_view ToString(HardwareKind kind);
std::optional<HardwareKind> ParseHardwareKind(std::string_view text);

struct HardwareSpec {
  std::string name;          // canonical form
  std::string display_name;  // as written in the source table
  Watts tdp;
  HardwareKind kind = HardwareKind::kOther;

  friend bool operator==(const HardwareSpec&, const HardwareSpec&) = default;
};

struct RigComponent {
  HardwareSpec spec;
  int count = 1;
};

class RigDescription {
 public:
  RigDescription() = default;
  // Throws Error if any count is < 1.
  RigDescription(std::vector<RigComponent> components, Watts overhead);

  const std::vector<RigComponent>& components() const { return components_; }
  Watts overhead() const { return overhead_; }

 private:
  std::vector<RigComponent> components_;
  Watts overhead_;
};

// Sum of tdp x count over all components, plus the overhead.
Watts PeakPower(const RigDescription& rig);

class HardwareRegistry {
 public:
  // Throws ParseError naming both lines on a duplicate canonical name.
  void Add(HardwareSpec spec, int line = 0);

  // Case- and whitespace-insensitive. Throws NotFoundError with the three
  // closest names.
  const HardwareSpec& Lookup(std::string_view name) const;

  std::vector<HardwareSpec> specs() const;
  std::size_t size() const { return specs_.size(); }
  bool empty() const { return specs_.empty(); }

 private:
  struct Entry {
    HardwareSpec spec;
    int line;
  };
  std::map<std::string, Entry> specs_;
};

HardwareRegistry LoadHardwareCsv(std::istream& in);
HardwareRegistry LoadHardwareCsvFile(const std::filesystem::path& path);

// The table compiled into the library from data/hardware.csv.
const HardwareRegistry& BuiltInHardwareRegistry();

std::string WriteHardwareCsv(const HardwareRegistry& registry);

// Rig file (JSON):
//
//   {"components": [{"name": "NVIDIA RTX A5000", "count": 2}],
//    "overhead_watts": 120}
//
// A component may carry "tdp_watts" (and optionally "kind") to describe
// hardware missing from `registry`. Throws ParseError / NotFoundError.
RigDescription LoadRigJson(std::istream& in, const HardwareRegistry& registry);
RigDescription LoadRigJsonFile(const std::filesystem::path& path,
                               const HardwareRegistry& registry);

}  // namespace climatecard

#endif  // CLIMATECARD_HARDWARE_H_
