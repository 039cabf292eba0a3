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

#include <random>
#include <sstream>
#include <string>

#include "climatecard/error.h"
#include "climatecard/text.h"
#include "gtest/gtest.h"

namespace climatecard {
namespace {

HardwareRegistry Load(const std::string& text) {
  std::istringstream in(text);
  return LoadHardwareCsv(in);
}

HardwareSpec Gpu(const std::string& name, double watts) {
  return {CanonicalKey(name), name, Watts(watts), HardwareKind::kGpu};
}

ParseError LoadError(const std::string& text) {
  try {
    Load(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError("", 0);
}

TEST(PeakPowerTest, Examples) {
  const HardwareSpec a5000 = BuiltInHardwareRegistry().Lookup("NVIDIA RTX A5000");
  EXPECT_EQ(a5000.tdp.value(), 230.0);
  EXPECT_EQ(PeakPower(RigDescription({{a5000, 2}}, Watts(120))).value(), 580.0);
  EXPECT_EQ(PeakPower(RigDescription({}, Watts(0))).value(), 0.0);
  EXPECT_EQ(PeakPower(RigDescription({}, Watts(500))).value(), 500.0);
}

TEST(PeakPowerTest, CountBelowOneRejected) {
  EXPECT_THROW(RigDescription({{Gpu("x", 10), 0}}, Watts(0)), Error);
  EXPECT_THROW(RigDescription({{Gpu("x", 10), -1}}, Watts(0)), Error);
}

TEST(PeakPowerTest, AdditiveOverDisjointComponents) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tdp(0.0, 1000.0), overhead(0.0, 300.0);
  std::uniform_int_distribution<int> count(1, 16), size(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RigComponent> left, right;
    const int n = size(rng), m = size(rng);
    for (int i = 0; i < n; ++i) left.push_back({Gpu("l" + std::to_string(i), tdp(rng)), count(rng)});
    for (int i = 0; i < m; ++i) right.push_back({Gpu("r" + std::to_string(i), tdp(rng)), count(rng)});
    std::vector<RigComponent> both = left;
    both.insert(both.end(), right.begin(), right.end());
    const double o = overhead(rng);
    const double lhs = PeakPower(RigDescription(both, Watts(o))).value();
    const double rhs = PeakPower(RigDescription(left, Watts(o))).value() +
                       PeakPower(RigDescription(right, Watts(0))).value();
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, lhs));
  }
}

TEST(PeakPowerTest, IntegerWattagesExact) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> tdp(0, 1000), count(1, 64), size(0, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RigComponent> components;
    long long expected = 0;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      const int w = tdp(rng), c = count(rng);
      components.push_back({Gpu("g" + std::to_string(i), w), c});
      expected += static_cast<long long>(w) * c;
    }
    expected += 120;
    EXPECT_EQ(PeakPower(RigDescription(components, Watts(120))).value(),
              static_cast<double>(expected));
  }
}

TEST(LoadHardwareCsvTest, ParsesRows) {
  const HardwareRegistry registry = Load(
      "# table\nname,tdp_watts,kind\nNVIDIA RTX A5000,230,gpu\nAMD EPYC 7742,225,cpu\n"
      "Fan,5,other\n");
  ASSERT_EQ(registry.size(), 3u);
  const HardwareSpec& spec = registry.Lookup("nvidia rtx a5000");
  EXPECT_EQ(spec.display_name, "NVIDIA RTX A5000");
  EXPECT_EQ(spec.kind, HardwareKind::kGpu);
  EXPECT_EQ(registry.Lookup("AMD  EPYC 7742").kind, HardwareKind::kCpu);
  EXPECT_EQ(registry.Lookup("fan").kind, HardwareKind::kOther);
}

TEST(LoadHardwareCsvTest, Errors) {
  ParseError e = LoadError("name,tdp_watts,kind\nGPU A,-5,gpu\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 2);
  e = LoadError("name,tdp_watts,kind\nGPU A,5,tpu\n");
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 3);
  e = LoadError("name,tdp_watts,kind\nGPU A,five,gpu\n");
  EXPECT_EQ(e.column(), 2);
  e = LoadError("name,tdp_watts,kind\nGPU A,5,gpu\nx,1,cpu\ngpu a,6,gpu\n");
  EXPECT_EQ(e.line(), 4);
  EXPECT_NE(std::string(e.what()).find("2 and 4"), std::string::npos) << e.what();
}

TEST(HardwareLookupTest, UnknownNameSuggests) {
  try {
    BuiltInHardwareRegistry().Lookup("NVIDIA RTX A500");
    FAIL() << "expected NotFoundError";
  } catch (const NotFoundError& e) {
    ASSERT_FALSE(e.suggestions().empty());
    EXPECT_EQ(e.suggestions().front(), "nvidia rtx a5000");
  }
}

TEST(HardwareRoundTripTest, BuiltInTableRoundTrips) {
  const HardwareRegistry& registry = BuiltInHardwareRegistry();
  EXPECT_GE(registry.size(), 10u);
  EXPECT_EQ(Load(WriteHardwareCsv(registry)).specs(), registry.specs());
}

TEST(RigJsonTest, RegistryAndInlineComponents) {
  std::istringstream in(R"({
    "components": [
      {"name": "nvidia rtx a5000", "count": 2},
      {"name": "Custom ASIC", "tdp_watts": 40, "kind": "other"}
    ],
    "overhead_watts": 120
  })");
  const RigDescription rig = LoadRigJson(in, BuiltInHardwareRegistry());
  ASSERT_EQ(rig.components().size(), 2u);
  EXPECT_EQ(rig.components()[0].count, 2);
  EXPECT_EQ(rig.components()[1].count, 1);
  EXPECT_EQ(PeakPower(rig).value(), 620.0);
}

TEST(RigJsonTest, Errors) {
  std::istringstream malformed("{\"components\": [");
  EXPECT_THROW(LoadRigJson(malformed, BuiltInHardwareRegistry()), ParseError);
  std::istringstream unknown(R"({"components": [{"name": "Quantum Widget"}]})");
  EXPECT_THROW(LoadRigJson(unknown, BuiltInHardwareRegistry()), NotFoundError);
  std::istringstream zero(R"({"components": [{"name": "NVIDIA Tesla T4", "count": 0}]})");
  EXPECT_THROW(LoadRigJson(zero, BuiltInHardwareRegistry()), Error);
}

}  // namespace
}  // namespace climatecard
