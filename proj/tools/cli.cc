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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "climatecard/card.h"
#include "climatecard/card_file.h"
#include "climatecard/emissions.h"
#include "climatecard/energy_mix.h"
#include "climatecard/error.h"
#include "climatecard/hardware.h"
#include "climatecard/render.h"
#include "climatecard/survey.h"

namespace climatecard::cli {
namespace {

namespace fs = std::filesystem;

// Thrown for flag combinations CLI11 cannot express; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::optional<fs::path> DataFile(const char* name) {
  const char* dir = std::getenv(kDataDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  fs::path path = fs::path(dir) / name;
  if (!fs::exists(path)) return std::nullopt;
  return path;
}

MixRegistry LoadMixRegistry() {
  if (auto path = DataFile("energy_mix.csv")) return LoadMixCsvFile(*path);
  return BuiltInMixRegistry();
}

HardwareRegistry LoadHardwareRegistry() {
  if (auto path = DataFile("hardware.csv")) return LoadHardwareCsvFile(*path);
  return BuiltInHardwareRegistry();
}

// Writes `text` to `path`, or to `out` when no path was given.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file) throw Error("failed writing " + path);
}

// Power flags shared by `estimate` and `card new`.
struct PowerFlags {
  std::optional<double> kilowatts;
  std::optional<double> watts;
  std::string rig_path;
  bool no_overhead = false;

  void Register(CLI::App& app) {
    auto* kw = app.add_option("--power-kw", kilowatts, "Peak power in kW")
                   ->check(CLI::NonNegativeNumber);
    auto* w = app.add_option("--power-watts", watts, "Peak power in W")
                  ->check(CLI::NonNegativeNumber);
    auto* rig = app.add_option("--rig", rig_path, "Rig file (JSON); power is the TDP sum")
                    ->check(CLI::ExistingFile);
    kw->excludes(w)->excludes(rig);
    w->excludes(rig);
    app.add_flag("--no-overhead", no_overhead, "Ignore the rig's overhead watts");
  }

  bool FromRig() const { return !rig_path.empty(); }

  // Direct power, or the rig (with overhead dropped on request).
  std::variant<Watts, RigDescription> Resolve() const {
    if (kilowatts) return KilowattsToWatts(Kilowatts(*kilowatts));
    if (watts) return Watts(*watts);
    if (rig_path.empty()) {
      throw UsageError("one of --power-kw, --power-watts or --rig is required");
    }
    RigDescription rig = LoadRigJsonFile(rig_path, LoadHardwareRegistry());
    if (no_overhead) rig = RigDescription(rig.components(), Watts(0.0));
    return rig;
  }
};

std::optional<UncertaintyBounds> Bounds(const std::optional<double>& low,
                                        const std::optional<double>& high,
                                        std::string_view flags) {
  if (low.has_value() != high.has_value()) {
    throw UsageError(std::string(flags) + " must be given together");
  }
  if (!low) return std::nullopt;
  try {
    return UncertaintyBounds(*low, *high);
  } catch (const InvalidQuantityError& e) {
    throw UsageError(e.what());
  }
}

struct EstimateCommand {
  double hours = 0.0;
  PowerFlags power;
  std::optional<double> mix;
  std::string location;
  std::optional<int> year;
  std::optional<std::int64_t> samples;
  std::optional<double> low;
  std::optional<double> high;

  void Register(CLI::App& app) {
    app.add_option("--hours", hours, "Computation time in hours (the whole pass with --samples)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    power.Register(app);
    auto* mix_option =
        app.add_option("--mix", mix, "Energy mix in gCO2eq/kWh")->check(CLI::NonNegativeNumber);
    auto* location_option =
        app.add_option("--location", location, "Location resolved in the energy mix table");
    mix_option->excludes(location_option);
    app.add_option("--year", year, "Energy mix year (latest at or before)")
        ->needs(location_option);
    app.add_option("--samples", samples, "Per-sample inference mode: samples in the pass")
        ->check(CLI::PositiveNumber);
    app.add_option("--low", low, "Low multiplicative uncertainty factor (0 < low <= 1)");
    app.add_option("--high", high, "High multiplicative uncertainty factor (>= 1)");
  }

  int Run(std::ostream& out) const {
    if (!mix && location.empty()) throw UsageError("one of --mix or --location is required");
    const auto bounds = Bounds(low, high, "--low and --high");
    const auto resolved = power.Resolve();
    const Watts watts = std::holds_alternative<Watts>(resolved)
                            ? std::get<Watts>(resolved)
                            : PeakPower(std::get<RigDescription>(resolved));
    const GramsPerKwh intensity =
        mix ? GramsPerKwh(*mix) : LoadMixRegistry().Lookup(location, year).intensity;
    const Kilowatts kw = WattsToKilowatts(watts);

    GramsCO2e grams;
    std::string suffix;
    if (samples) {
      grams = InferenceEmissionsPerSample(InferenceProfile(Hours(hours), kw, intensity, *samples));
      suffix = " per sample";
    } else {
      grams = TrainingEmissions({Hours(hours), kw, intensity});
    }
    out << FormatNumber(grams.value()) << " g (" << FormatMass(grams) << ")" << suffix << "\n";
    if (bounds) {
      const auto [lo, hi] = ApplyUncertainty(grams, *bounds);
      out << "range: " << FormatNumber(lo.value()) << " g to " << FormatNumber(hi.value())
          << " g (" << FormatMass(lo) << " to " << FormatMass(hi) << ")\n";
    }
    if (power.FromRig()) {
      out << "note: " << ToString(BiasNote::kLikelyOverestimate)
          << " (power is the TDP sum of the rig)\n";
    }
    return kExitOk;
  }
};

struct CardNewCommand {
  std::string model_name;
  std::string is_public;
  double final_hours = 0.0;
  double total_hours = 0.0;
  std::optional<double> total_low;
  std::optional<double> total_high;
  PowerFlags power;
  std::string location;
  std::optional<int> year;
  std::optional<double> mix;
  std::optional<double> inference_hours;
  std::optional<std::int64_t> samples;
  std::string impact_category;
  std::string impact_text;
  std::optional<std::string> comments;
  std::string out_path;
  bool strict = false;

  void Register(CLI::App& app) {
    app.add_option("--model-name", model_name, "Model name")->required();
    app.add_option("--public", is_public, "Is the model publicly available?")
        ->required()
        ->check(CLI::IsMember({"yes", "no", "true", "false"}, CLI::ignore_case));
    app.add_option("--final-hours", final_hours, "Training time of the final model")
        ->required()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--total-hours", total_hours, "Time of all experiments")
        ->required()
        ->check(CLI::NonNegativeNumber);
    app.add_option("--total-low", total_low, "Low factor on the total time");
    app.add_option("--total-high", total_high, "High factor on the total time");
    power.Register(app);
    app.add_option("--location", location, "Where the computations ran")->required();
    app.add_option("--year", year, "Energy mix year (latest at or before)");
    app.add_option("--mix", mix, "Energy mix override in gCO2eq/kWh")
        ->check(CLI::NonNegativeNumber);
    auto* inference = app.add_option("--inference-hours", inference_hours,
                                     "Wall time of an inference pass")
                          ->check(CLI::NonNegativeNumber);
    auto* sample_option =
        app.add_option("--samples", samples, "Samples in the inference pass")
            ->check(CLI::PositiveNumber);
    inference->needs(sample_option);
    sample_option->needs(inference);
    app.add_option("--impact-category", impact_category, "Positive impact category")
        ->check(CLI::IsMember({"fundamental_theories", "building_block_tools", "applicable_tools",
                               "deployed_applications", "direct_positive"}));
    app.add_option("--impact-text", impact_text, "Expected positive environmental impact");
    app.add_option("--comments", comments, "Free-text comments");
    app.add_option("--out", out_path, "Card file to write (default: stdout)");
    app.add_flag("--strict", strict, "Fail when the location has no energy mix");
  }

  int Run(std::ostream& out, std::ostream& err) const {
    CardInputs inputs;
    inputs.model_name = model_name;
    inputs.is_public = CLI::detail::to_lower(is_public) == "yes" ||
                       CLI::detail::to_lower(is_public) == "true";
    inputs.final_training_duration = Hours(final_hours);
    inputs.total_duration = Hours(total_hours);
    inputs.total_duration_bounds = Bounds(total_low, total_high, "--total-low and --total-high");
    inputs.power = power.Resolve();
    inputs.location = location;
    inputs.mix_year = year;
    if (mix) inputs.mix_override = GramsPerKwh(*mix);
    if (inference_hours) {
      inputs.inference = CardInputs::InferenceRun{Hours(*inference_hours), *samples};
    }
    if (!impact_category.empty() || !impact_text.empty()) {
      inputs.positive_impact = PositiveImpact{
          impact_category.empty() ? std::nullopt : ParseImpactCategory(impact_category),
          impact_text};
    }
    inputs.comments = comments;
    if (power.FromRig()) {
      // The card file has no key for bias notes; keep it in the comments.
      const std::string note =
          "Power is the TDP sum of the hardware, so emissions are likely overestimated.";
      inputs.comments = comments ? *comments + " " + note : note;
    }

    const ClimateCard card = DeriveCard(inputs, LoadMixRegistry(), strict);
    if (!card.mix) {
      err << "warning: no energy mix for '" << location
          << "'; fields 6-9 left empty (use --mix or --strict)\n";
    }
    Emit(WriteCard(card), out_path, out);
    return kExitOk;
  }
};

struct CardValidateCommand {
  std::string path;
  double tolerance = kDefaultTolerance;
  bool strict = false;

  void Register(CLI::App& app) {
    app.add_option("card", path, "Card file")->required();
    app.add_option("--tolerance", tolerance, "Relative tolerance for recomputed emissions")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--strict", strict, "Treat warnings and unknown keys as errors");
  }

  int Run(std::ostream& out, std::ostream& err) const {
    std::vector<std::string> warnings;
    const ClimateCard card = ReadCardFile(path, {strict}, &warnings);
    for (const auto& warning : warnings) err << "warning: " << warning << "\n";
    const auto findings = Validate(card, {tolerance, strict});
    for (const auto& finding : findings) out << FormatFinding(finding) << "\n";
    return HasErrors(findings) ? kExitDomainError : kExitOk;
  }
};

struct CardRenderCommand {
  std::string path;
  std::string format = "md";
  std::string out_path;

  void Register(CLI::App& app) {
    app.add_option("card", path, "Card file")->required();
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"md", "tex", "hub-yaml"}));
    app.add_option("--out", out_path, "Output file (default: stdout)");
  }

  int Run(std::ostream& out, std::ostream& err) const {
    std::vector<std::string> warnings;
    const ClimateCard card = ReadCardFile(path, {}, &warnings);
    for (const auto& warning : warnings) err << "warning: " << warning << "\n";
    std::string text;
    if (format == "md") {
      text = RenderMarkdown(card);
    } else if (format == "tex") {
      text = RenderLatex(card);
    } else {
      text = RenderHubYaml(card);
    }
    Emit(text, out_path, out);
    return kExitOk;
  }
};

struct SurveyCommand {
  std::string corpus_path;
  std::string out_path;
  std::string per_document_path;
  bool repair_hyphenation = false;
  int threads = 0;

  void Register(CLI::App& app) {
    app.add_option("--corpus", corpus_path, "Corpus in JSON Lines")->required();
    app.add_option("--out", out_path, "Report file (default: stdout)");
    app.add_option("--per-document", per_document_path, "Write per-document matches here");
    app.add_flag("--repair-hyphenation", repair_hyphenation,
                 "Rejoin words hyphenated across line breaks");
    app.add_option("--threads", threads, "Worker threads (0: all cores)")
        ->check(CLI::NonNegativeNumber);
  }

  int Run(std::ostream& out) const {
    const auto corpus = LoadCorpusJsonlFile(corpus_path, repair_hyphenation);
    const SurveyReport report = Survey(corpus, threads);
    std::ostringstream text;
    WriteSurveyReport(report, text);
    Emit(text.str(), out_path, out);
    if (!per_document_path.empty()) {
      std::ostringstream docs;
      WriteDocumentMatches(report, docs);
      Emit(docs.str(), per_document_path, out);
    }
    return kExitOk;
  }
};

struct MixCommands {
  std::string location;
  std::optional<int> year;
  std::string import_path;
  std::string out_path;

  void Register(CLI::App& lookup, CLI::App& import) {
    lookup.add_option("location", location, "Location name")->required();
    lookup.add_option("--year", year, "Latest record at or before this year");
    import.add_option("file", import_path, "Energy mix CSV")->required();
    import.add_option("--out", out_path, "Write the canonical CSV here (default: stdout)");
  }

  int Lookup(std::ostream& out) const {
    const MixRegistry registry = LoadMixRegistry();
    const EnergyMixRecord& record = registry.Lookup(location, year);
    out << FormatNumber(record.intensity.value()) << " gCO2eq/kWh (" << record.location << ", "
        << record.year << ", source: " << record.source << ")\n";
    return kExitOk;
  }

  int Import(std::ostream& out, std::ostream& err) const {
    const MixRegistry registry = LoadMixCsvFile(import_path);
    Emit(WriteMixCsv(registry), out_path, out);
    err << registry.size() << " energy mix records\n";
    return kExitOk;
  }
};

struct HardwareCommands {
  std::string name;
  std::string import_path;
  std::string out_path;

  void Register(CLI::App& lookup, CLI::App& import) {
    lookup.add_option("name", name, "Hardware name")->required();
    import.add_option("file", import_path, "Hardware CSV")->required();
    import.add_option("--out", out_path, "Write the canonical CSV here (default: stdout)");
  }

  int Lookup(std::ostream& out) const {
    const HardwareRegistry registry = LoadHardwareRegistry();
    const HardwareSpec& spec = registry.Lookup(name);
    out << FormatNumber(spec.tdp.value()) << " W (" << spec.display_name << ", "
        << ToString(spec.kind) << ")\n";
    return kExitOk;
  }

  int Import(std::ostream& out, std::ostream& err) const {
    const HardwareRegistry registry = LoadHardwareCsvFile(import_path);
    Emit(WriteHardwareCsv(registry), out_path, out);
    err << registry.size() << " hardware records\n";
    return kExitOk;
  }
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Climate performance model cards: emission estimates, card validation and "
               "rendering, corpus surveys"};
  app.name("climatecard");
  app.require_subcommand(1);

  EstimateCommand estimate;
  estimate.Register(*app.add_subcommand("estimate", "Estimate CO2eq emissions in grams"));

  auto* card = app.add_subcommand("card", "Create, validate and render card files");
  card->require_subcommand(1);
  CardNewCommand card_new;
  card_new.Register(*card->add_subcommand("new", "Derive a card from experiment facts"));
  CardValidateCommand card_validate;
  card_validate.Register(*card->add_subcommand("validate", "Lint a card file"));
  CardRenderCommand card_render;
  card_render.Register(*card->add_subcommand("render", "Render a card as md, tex or hub-yaml"));

  SurveyCommand survey;
  survey.Register(*app.add_subcommand("survey", "Survey climate reporting in a corpus"));

  auto* mix = app.add_subcommand("mix", "Energy mix table");
  mix->require_subcommand(1);
  MixCommands mix_commands;
  mix_commands.Register(*mix->add_subcommand("lookup", "Look up a location"),
                        *mix->add_subcommand("import", "Validate and print a mix CSV"));

  auto* hw = app.add_subcommand("hw", "Hardware TDP table");
  hw->require_subcommand(1);
  HardwareCommands hw_commands;
  hw_commands.Register(*hw->add_subcommand("lookup", "Look up a hardware component"),
                       *hw->add_subcommand("import", "Validate and print a hardware CSV"));

  std::vector<const char*> argv = {"climatecard"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\nrun 'climatecard --help' for usage\n";
    return kExitUsage;
  }

  const auto parsed = [](CLI::App* parent, std::string_view name) {
    return parent->get_subcommand(std::string(name))->parsed();
  };

  try {
    if (parsed(&app, "estimate")) return estimate.Run(out);
    if (parsed(&app, "card")) {
      if (parsed(card, "new")) return card_new.Run(out, err);
      if (parsed(card, "validate")) return card_validate.Run(out, err);
      return card_render.Run(out, err);
    }
    if (parsed(&app, "survey")) return survey.Run(out);
    if (parsed(&app, "mix")) {
      return parsed(mix, "lookup") ? mix_commands.Lookup(out) : mix_commands.Import(out, err);
    }
    return parsed(hw, "lookup") ? hw_commands.Lookup(out) : hw_commands.Import(out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace climatecard::cli
