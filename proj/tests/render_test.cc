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

#include "climatecard/render.h"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "climatecard/card_file.h"
#include "gtest/gtest.h"
#include "yaml-cpp/yaml.h"

namespace climatecard {
namespace {

const std::string kTestData = CLIMATECARD_TESTDATA_DIR;

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in) << path;
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ClimateCard Fixture() { return ReadCardFile(kTestData + "/climatebert.card"); }

ClimateCard MinimumCard() {
  ClimateCard card;
  card.model_name = "Tiny";
  card.is_public = false;
  card.final_training_duration = Hours(1);
  card.total_duration = Hours(2.5);
  card.power = Watts(250);
  card.location = "France";
  return card;
}

void ExpectCleanLines(const std::string& text) {
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find('\r'), std::string::npos);
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty()) {
      EXPECT_NE(line.back(), ' ') << "line " << number;
      EXPECT_NE(line.back(), '\t') << "line " << number;
    }
  }
}

TEST(RenderGoldenTest, Markdown) {
  EXPECT_EQ(RenderMarkdown(Fixture()), Slurp(kTestData + "/climatebert.md"));
}

TEST(RenderGoldenTest, Latex) {
  EXPECT_EQ(RenderLatex(Fixture()), Slurp(kTestData + "/climatebert.tex"));
}

TEST(RenderGoldenTest, HubYaml) {
  EXPECT_EQ(RenderHubYaml(Fixture()), Slurp(kTestData + "/climatebert.hub.yaml"));
}

TEST(RenderMarkdownTest, ReferenceRows) {
  const std::string md = RenderMarkdown(Fixture());
  EXPECT_NE(md.find("| 7. CO2eq for final model | 2.63 kg |\n"), std::string::npos);
  EXPECT_NE(md.find("| 8. CO2eq for all experiments | 94.75 kg |\n"), std::string::npos);
  EXPECT_NE(md.find("| 9. Average CO2eq for inference per sample | 0.62 mg |\n"),
            std::string::npos);
  EXPECT_NE(md.find("| 6. Energy mix at location | 470 gCO2eq/kWh |\n"), std::string::npos);
}

TEST(RenderMarkdownTest, MinimumCardLeavesExtendedRowsEmpty) {
  const std::string md = RenderMarkdown(MinimumCard());
  for (int field = 6; field <= 11; ++field) {
    const std::string row = "| " + std::to_string(field) + ". " +
                            std::string(CardRowLabel(field)) + " | — |\n";
    EXPECT_NE(md.find(row), std::string::npos) << row;
  }
  EXPECT_NE(md.find("| 1. Model publicly available? | No |\n"), std::string::npos);
  EXPECT_NE(md.find("| 3. Time for all experiments | 2.5 hours |\n"), std::string::npos);
  EXPECT_NE(md.find("| 4. Power of GPU and CPU | 0.25 kW |\n"), std::string::npos);
  ExpectCleanLines(md);
}

TEST(RenderMarkdownTest, PipesEscaped) {
  ClimateCard card = Fixture();
  card.comments = "a | b";
  EXPECT_NE(RenderMarkdown(card).find("| 11. Comments | a \\| b |\n"), std::string::npos);
}

TEST(RenderTest, InvalidCardRefused) {
  ClimateCard card = Fixture();
  card.location.reset();
  try {
    RenderMarkdown(card);
    FAIL() << "expected InvalidCardError";
  } catch (const InvalidCardError& e) {
    ASSERT_EQ(e.findings().size(), 1u);
    EXPECT_EQ(e.findings()[0].field, 5);
  }
  EXPECT_THROW(RenderLatex(card), InvalidCardError);
  EXPECT_THROW(RenderHubYaml(card), InvalidCardError);
}

TEST(RenderLatexTest, ReferenceRowAndEscaping) {
  ClimateCard card = Fixture();
  EXPECT_NE(RenderLatex(card).find("7. CO$_2$eq for final model & 2.63 kg \\\\\n"),
            std::string::npos);
  card.comments = "R&D at 100% with $5_{x} #1 ~ ^ \\";
  const std::string tex = RenderLatex(card);
  EXPECT_NE(tex.find("R\\&D at 100\\% with \\$5\\_\\{x\\} \\#1 \\textasciitilde{} "
                     "\\textasciicircum{} \\textbackslash{}"),
            std::string::npos)
      << tex;
  EXPECT_EQ(tex.find("R&D"), std::string::npos);
}

TEST(RenderLatexTest, MinimumCard) {
  const std::string tex = RenderLatex(MinimumCard());
  EXPECT_NE(tex.find("7. CO$_2$eq for final model & --- \\\\\n"), std::string::npos);
  ExpectCleanLines(tex);
}

TEST(EscapeLatexTest, PlainTextUntouched) {
  EXPECT_EQ(EscapeLatex("plain text, 42."), "plain text, 42.");
  EXPECT_EQ(EscapeLatex(""), "");
}

TEST(RenderHubYamlTest, ParsesWithFixedKeyOrder) {
  const YAML::Node doc = YAML::Load(RenderHubYaml(Fixture()));
  const YAML::Node block = doc["co2_eq_emissions"];
  ASSERT_TRUE(block.IsMap());
  EXPECT_EQ(block["emissions"].as<double>(), 2632.0);
  EXPECT_EQ(block["geographical_location"].as<std::string>(), "Germany");
  std::vector<std::string> keys;
  for (const auto& entry : block) keys.push_back(entry.first.as<std::string>());
  EXPECT_EQ(keys, (std::vector<std::string>{"emissions", "source", "training_type",
                                            "geographical_location", "hardware_used"}));
}

TEST(RenderHubYamlTest, AwkwardLocationsSurviveYaml) {
  for (const std::string location :
       {"yes", "null", "Korea: South", "#1 region", "\"quoted\"", "- list", "123", "true",
        "Côte d'Ivoire", "back\\slash", "~", "a: b #c"}) {
    ClimateCard card = Fixture();
    card.location = location;
    const YAML::Node doc = YAML::Load(RenderHubYaml(card));
    EXPECT_EQ(doc["co2_eq_emissions"]["geographical_location"].as<std::string>(), *card.location)
        << location;
  }
}

TEST(RenderHubYamlTest, MissingFinalEmissionsRefused) {
  ClimateCard card = Fixture();
  card.final_emissions.reset();
  EXPECT_THROW(RenderHubYaml(card), InvalidCardError);
}

TEST(RenderTest, Deterministic) {
  const ClimateCard card = Fixture();
  EXPECT_EQ(RenderMarkdown(card), RenderMarkdown(Fixture()));
  EXPECT_EQ(RenderLatex(card), RenderLatex(Fixture()));
  EXPECT_EQ(RenderHubYaml(card), RenderHubYaml(Fixture()));
  ExpectCleanLines(RenderMarkdown(card));
  ExpectCleanLines(RenderLatex(card));
  ExpectCleanLines(RenderHubYaml(card));
}

// Parses "<numeral> <unit>" from the value cell of a Markdown row.
std::pair<double, std::string> Cell(const std::string& md, int field) {
  const std::string prefix =
      "| " + std::to_string(field) + ". " + std::string(CardRowLabel(field)) + " | ";
  const auto start = md.find(prefix);
  if (start == std::string::npos) return {NAN, ""};
  const auto begin = start + prefix.size();
  const std::string cell = md.substr(begin, md.find(" |", begin) - begin);
  std::istringstream in(cell);
  double value = NAN;
  std::string unit;
  in >> value >> unit;
  return {value, unit};
}

TEST(RenderTest, NumericValuesReparseWithinDisplayRounding) {
  const std::map<std::string, double> grams_per = {
      {"mg", 1e-3}, {"g", 1.0}, {"kg", 1e3}, {"t", 1e6}};
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> exponent(-5.0, 10.0), hours(0.0, 1000.0);
  for (int trial = 0; trial < 1000; ++trial) {
    ClimateCard card = MinimumCard();
    card.final_training_duration = Hours(hours(rng));
    card.total_duration = Hours(card.final_training_duration->value() + hours(rng));
    card.power = Watts(std::pow(10.0, exponent(rng) / 3));
    card.mix = GramsPerKwh(std::pow(10.0, exponent(rng) / 5));
    card.final_emissions =
        EmissionEstimate{GramsCO2e(std::pow(10.0, exponent(rng))), std::nullopt, std::nullopt};
    const std::string md = RenderMarkdown(card);

    const auto [hours_value, hours_unit] = Cell(md, 2);
    EXPECT_EQ(hours_value, card.final_training_duration->value());
    const auto [kw, kw_unit] = Cell(md, 4);
    EXPECT_EQ(kw_unit, "kW");
    EXPECT_EQ(kw, WattsToKilowatts(*card.power).value());
    const auto [mix, mix_unit] = Cell(md, 6);
    EXPECT_EQ(mix, card.mix->value());

    const auto [numeral, unit] = Cell(md, 7);
    ASSERT_TRUE(grams_per.contains(unit)) << md;
    const double scale = grams_per.at(unit);
    const double stored = card.final_emissions->emissions.value();
    // Two decimals: at most half a hundredth of the unit, plus representation slack.
    EXPECT_LE(std::fabs(numeral * scale - stored), 0.005 * scale * (1 + 1e-9) + 1e-12 * stored)
        << md;
  }
}

}  // namespace
}  // namespace climatecard
