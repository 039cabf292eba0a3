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

#include <array>
#include <cctype>
#include <functional>

#include "climatecard/text.h"

namespace climatecard {
namespace {

constexpr std::array<std::string_view, kCardFieldCount> kRowLabels = {
    "Model publicly available?",
    "Time to train final model",
    "Time for all experiments",
    "Power of GPU and CPU",
    "Location for computations",
    "Energy mix at location",
    "CO2eq for final model",
    "CO2eq for all experiments",
    "Average CO2eq for inference per sample",
    "Positive environmental impact",
    "Comments",
};

constexpr std::string_view kHubSource =
    "climatecard: hours x power (kW) x energy mix (gCO2eq/kWh), emissions in grams CO2eq";

void RequireValid(const ClimateCard& card) {
  auto findings = ValidateMinimum(card);
  if (HasErrors(findings)) throw InvalidCardError(std::move(findings));
}

// One line, single spaces, no leading or trailing blanks.
std::string OneLine(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string BiasSuffix(const EmissionEstimate& estimate) {
  if (!estimate.bias_note || *estimate.bias_note == BiasNote::kUnknown) return "";
  return *estimate.bias_note == BiasNote::kLikelyOverestimate ? " (likely overestimate)"
                                                              : " (likely underestimate)";
}

std::string FormatEstimate(const EmissionEstimate& estimate) {
  std::string out = FormatMass(estimate.emissions);
  if (estimate.uncertainty) {
    const auto [low, high] = ApplyUncertainty(estimate.emissions, *estimate.uncertainty);
    out += " (" + FormatMass(low) + " to " + FormatMass(high) + ")";
  }
  return out + BiasSuffix(estimate);
}

std::string FormatTotalDuration(const ClimateCard& card) {
  std::string out = FormatHours(*card.total_duration);
  if (card.total_duration_bounds) {
    const Hours low = *card.total_duration * card.total_duration_bounds->low_factor();
    const Hours high = *card.total_duration * card.total_duration_bounds->high_factor();
    out += " (" + FormatNumber(low.value()) + " to " + FormatHours(high) + ")";
  }
  return out;
}

std::string FormatImpact(const PositiveImpact& impact) {
  const std::string text = OneLine(impact.text);
  if (!impact.category) return text;
  std::string out(DisplayName(*impact.category));
  if (!text.empty()) out += ": " + text;
  return out;
}

// Plain-text value of every field; nullopt for absent extended fields. The
// mix unit is supplied by the caller since it differs between formats.
std::array<std::optional<std::string>, kCardFieldCount> FieldValues(
    const ClimateCard& card, std::string_view mix_unit) {
  std::array<std::optional<std::string>, kCardFieldCount> values;
  values[0] = *card.is_public ? "Yes" : "No";
  values[1] = FormatHours(*card.final_training_duration);
  values[2] = FormatTotalDuration(card);
  values[3] = FormatPower(*card.power);
  values[4] = OneLine(*card.location);
  if (card.mix) values[5] = FormatNumber(card.mix->value()) + " " + std::string(mix_unit);
  if (card.final_emissions) values[6] = FormatEstimate(*card.final_emissions);
  if (card.total_emissions) values[7] = FormatEstimate(*card.total_emissions);
  if (card.inference_per_sample) values[8] = FormatEstimate(*card.inference_per_sample);
  if (card.positive_impact) values[9] = FormatImpact(*card.positive_impact);
  if (card.comments) values[10] = OneLine(*card.comments);
  return values;
}

std::string EscapeMarkdownCell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

bool IsPlainYamlScalar(std::string_view text) {
  if (text.empty() || text.front() == ' ' || text.back() == ' ') return false;
  if (!std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  for (char c : text) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == ' ' || c == '.' ||
                    c == '_' || c == '/' || c == '-' || c == '(' || c == ')';
    if (!ok) return false;
  }
  static constexpr std::array<std::string_view, 11> kReserved = {
      "true", "false", "yes", "no", "on", "off", "null", "y", "n", "nan", "inf"};
  const std::string lowered = CanonicalKey(text);
  for (std::string_view word : kReserved) {
    if (lowered == word) return false;
  }
  return true;
}

std::string YamlScalar(std::string_view text) {
  if (IsPlainYamlScalar(text)) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out.push_back(c);
    }
  }
  return out + "\"";
}

}  // namespace

std::string_view CardRowLabel(int field) {
  if (field < 1 || field > kCardFieldCount) return "";
  return kRowLabels[field - 1];
}

std::string EscapeLatex(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '\\':
        out += "\\textbackslash{}";
        break;
      case '&':
      case '%':
      case '$':
      case '#':
      case '_':
      case '{':
      case '}':
        out.push_back('\\');
        out.push_back(c);
        break;
      case '~':
        out += "\\textasciitilde{}";
        break;
      case '^':
        out += "\\textasciicircum{}";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string RenderMarkdown(const ClimateCard& card) {
  RequireValid(card);
  const auto values = FieldValues(card, "gCO2eq/kWh");
  const std::string name = OneLine(card.model_name);

  std::string out = "# Climate performance model card";
  if (!name.empty()) out += ": " + EscapeMarkdownCell(name);
  out += "\n\n| Information | Value |\n| --- | --- |\n";
  for (int field = 1; field <= kCardFieldCount; ++field) {
    const auto& value = values[field - 1];
    out += "| " + std::to_string(field) + ". " + std::string(CardRowLabel(field)) + " | " +
           (value ? EscapeMarkdownCell(*value) : std::string("\u2014")) + " |\n";
  }
  return out;
}

std::string RenderLatex(const ClimateCard& card) {
  RequireValid(card);
  const auto values = FieldValues(card, "gCO$_2$eq/kWh");
  const std::string name = EscapeLatex(OneLine(card.model_name));

  const auto label = [](int field) {
    std::string text(CardRowLabel(field));
    if (auto pos = text.find("CO2eq"); pos != std::string::npos) text.replace(pos, 5, "CO$_2$eq");
    return std::to_string(field) + ". " + text;
  };
  const auto section = [](std::string_view title) {
    return "\\multicolumn{2}{c}{\\textbf{" + std::string(title) + "}} \\\\\n\\midrule\n";
  };

  std::string out =
      "\\begin{table}[t]\n"
      "\\small\n"
      "\\begin{tabular}{@{}p{55mm}p{25mm}@{}}\n"
      "\\toprule\n";
  if (!name.empty()) out += section(name);
  out += section("Minimum card");
  for (int field = 1; field <= kCardFieldCount; ++field) {
    if (field == 6) out += "\\midrule\n" + section("Extended card");
    const auto& value = values[field - 1];
    // The mix unit is already LaTeX; every other value is plain text.
    std::string cell = !value ? "---" : field == 6 ? *value : EscapeLatex(*value);
    out += label(field) + " & " + cell + " \\\\\n";
  }
  out +=
      "\\bottomrule\n"
      "\\end{tabular}\n"
      "\\caption{Climate performance model card";
  if (!name.empty()) out += " for " + name;
  out += ".}\n\\end{table}\n";
  return out;
}

std::string RenderHubYaml(const ClimateCard& card) {
  RequireValid(card);
  if (!card.final_emissions) {
    throw InvalidCardError({LintFinding{Severity::kError, "extended-field-missing",
                                        Principle::kCompleteness,
                                        "hub metadata needs the final model emissions", 7}});
  }
  std::string out = "co2_eq_emissions:\n";
  out += "  emissions: " + FormatNumber(card.final_emissions->emissions.value()) + "\n";
  out += "  source: " + YamlScalar(kHubSource) + "\n";
  out += "  training_type: " + YamlScalar("final model training") + "\n";
  out += "  geographical_location: " + YamlScalar(OneLine(*card.location)) + "\n";
  out += "  hardware_used: " + YamlScalar(FormatPower(*card.power) + " peak power") + "\n";
  return out;
}

}  // namespace climatecard
