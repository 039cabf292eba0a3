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

#include "climatecard/card_file.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>

#include "json.hpp"

namespace climatecard {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Position {
  int line = 1;
  int column = 1;
};

Position PositionOf(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

class CardReader {
 public:
  CardReader(std::string text, const CardReadOptions& options, std::vector<std::string>* warnings)
      : text_(std::move(text)), options_(options), warnings_(warnings) {}

  ClimateCard Read() {
    try {
      doc_ = json::parse(text_);
    } catch (const json::parse_error& e) {
      const Position pos = PositionOf(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError("line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.column) + ": malformed card file",
                       pos.line, pos.column);
    }
    if (!doc_.is_object()) throw ParseError("line 1: card file must be a JSON object", 1, 1);

    for (const auto& [key, value] : doc_.items()) {
      if (std::find(kCardFileKeys.begin(), kCardFileKeys.end(), key) != kCardFileKeys.end()) {
        continue;
      }
      if (options_.strict) Fail(key, "unknown key");
      if (warnings_) warnings_->push_back(Where(key) + ": unknown key '" + key + "' ignored");
    }

    ClimateCard card;
    card.model_name = String("model_name").value_or("");
    if (Present("public")) {
      if (!doc_["public"].is_boolean()) Fail("public", "expected true or false");
      card.is_public = doc_["public"].get<bool>();
    }
    card.final_training_duration = Number<Hours>("final_training_hours");
    card.total_duration = Number<Hours>("total_hours");

    const auto low = Double("total_hours_low_factor");
    const auto high = Double("total_hours_high_factor");
    if (low.has_value() != high.has_value()) {
      Fail(low ? "total_hours_low_factor" : "total_hours_high_factor",
           "low and high factors must be given together");
    }
    if (low) {
      try {
        card.total_duration_bounds = UncertaintyBounds(*low, *high);
      } catch (const InvalidQuantityError& e) {
        Fail("total_hours_low_factor", e.what());
      }
    }

    card.power = Number<Watts>("power_watts");
    card.location = String("location");
    card.mix = Number<GramsPerKwh>("mix_gco2eq_per_kwh");
    if (auto grams = Number<GramsCO2e>("final_emissions_g")) {
      card.final_emissions = EmissionEstimate{*grams, std::nullopt, std::nullopt};
    }
    if (auto grams = Number<GramsCO2e>("total_emissions_g")) {
      card.total_emissions = EmissionEstimate{*grams, card.total_duration_bounds, std::nullopt};
    }
    if (auto grams = Number<GramsCO2e>("inference_per_sample_g")) {
      card.inference_per_sample = EmissionEstimate{*grams, std::nullopt, std::nullopt};
    }

    const auto category_text = String("impact_category");
    const auto impact_text = String("impact_text");
    if (category_text || impact_text) {
      PositiveImpact impact;
      if (category_text) {
        impact.category = ParseImpactCategory(*category_text);
        if (!impact.category) {
          Fail("impact_category",
               "'" + *category_text +
                   "' is not one of fundamental_theories, building_block_tools, "
                   "applicable_tools, deployed_applications, direct_positive");
        }
      }
      impact.text = impact_text.value_or("");
      card.positive_impact = std::move(impact);
    }
    card.comments = String("comments");
    return card;
  }

 private:
  bool Present(const std::string& key) const {
    return doc_.contains(key) && !doc_[key].is_null();
  }

  std::optional<Position> KeyPosition(const std::string& key) const {
    const auto offset = text_.find("\"" + key + "\"");
    if (offset == std::string::npos) return std::nullopt;
    return PositionOf(text_, offset);
  }

  std::string Where(const std::string& key) const {
    const auto pos = KeyPosition(key);
    if (!pos) return "key '" + key + "'";
    return "line " + std::to_string(pos->line) + ", column " + std::to_string(pos->column);
  }

  [[noreturn]] void Fail(const std::string& key, const std::string& message) const {
    const Position pos = KeyPosition(key).value_or(Position{0, 0});
    throw ParseError(Where(key) + ": " + key + ": " + message, pos.line, pos.column);
  }

  std::optional<std::string> String(const std::string& key) const {
    if (!Present(key)) return std::nullopt;
    if (!doc_[key].is_string()) Fail(key, "expected a string");
    return doc_[key].get<std::string>();
  }

  std::optional<double> Double(const std::string& key) const {
    if (!Present(key)) return std::nullopt;
    if (!doc_[key].is_number()) Fail(key, "expected a number");
    return doc_[key].get<double>();
  }

  template <typename Q>
  std::optional<Q> Number(const std::string& key) const {
    const auto value = Double(key);
    if (!value) return std::nullopt;
    try {
      return Q(*value);
    } catch (const InvalidQuantityError& e) {
      Fail(key, e.what());
    }
  }

  std::string text_;
  CardReadOptions options_;
  std::vector<std::string>* warnings_;
  json doc_;
};

// Integral values are written without a fractional part.
ordered_json NumberValue(double value) {
  constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
  if (std::fabs(value) < kExactIntegerLimit && std::trunc(value) == value) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

}  // namespace

ClimateCard ReadCard(std::istream& in, const CardReadOptions& options,
                     std::vector<std::string>* warnings) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return CardReader(std::move(text), options, warnings).Read();
}

ClimateCard ReadCardFile(const std::filesystem::path& path, const CardReadOptions& options,
                         std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open card file " + path.string());
  try {
    return ReadCard(in, options, warnings);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

std::string WriteCard(const ClimateCard& card) {
  ordered_json doc = ordered_json::object();
  doc["model_name"] = card.model_name;
  if (card.is_public) doc["public"] = *card.is_public;
  if (card.final_training_duration) {
    doc["final_training_hours"] = NumberValue(card.final_training_duration->value());
  }
  if (card.total_duration) doc["total_hours"] = NumberValue(card.total_duration->value());
  if (card.total_duration_bounds) {
    doc["total_hours_low_factor"] = NumberValue(card.total_duration_bounds->low_factor());
    doc["total_hours_high_factor"] = NumberValue(card.total_duration_bounds->high_factor());
  }
  if (card.power) doc["power_watts"] = NumberValue(card.power->value());
  if (card.location) doc["location"] = *card.location;
  if (card.mix) doc["mix_gco2eq_per_kwh"] = NumberValue(card.mix->value());
  if (card.final_emissions) doc["final_emissions_g"] = NumberValue(card.final_emissions->emissions.value());
  if (card.total_emissions) doc["total_emissions_g"] = NumberValue(card.total_emissions->emissions.value());
  if (card.inference_per_sample) {
    doc["inference_per_sample_g"] = NumberValue(card.inference_per_sample->emissions.value());
  }
  if (card.positive_impact) {
    if (card.positive_impact->category) {
      doc["impact_category"] = std::string(ToString(*card.positive_impact->category));
    }
    doc["impact_text"] = card.positive_impact->text;
  }
  if (card.comments) doc["comments"] = *card.comments;
  return doc.dump(2) + "\n";
}

}  // namespace climatecard
