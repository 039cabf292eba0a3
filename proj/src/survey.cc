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

#include "climatecard/survey.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <thread>

#include <boost/regex.hpp>

#include "climatecard/emissions.h"
#include "climatecard/error.h"
#include "climatecard/quantities.h"
#include "json.hpp"

namespace climatecard {
namespace {

constexpr std::string_view kPublicWeightsPattern =
    R"((((model|weight) (will be|is)?|(models|weights) (will be|are)?) (public|available|upload|made available|made public|provided (at|under|on)))|((publish|upload) [a-zA-Z0-9, ]{0,20}(model(s)?|weight(s)?))|(make [a-zA-Z0-9, ]{0,20}(model(s)?|weight(s)?) (available|public))|(provide [a-zA-Z0-9, ]{0,20}(model(s)?|weight(s)?) (at|under|on)))";
constexpr std::string_view kDurationPattern =
    R"((((pre(-)?)?train(ing|ed)?|optimize|optimization|(fine(-)?)?tun(e|ed|ing)) ([a-zA-Z0-9, ]{0,20})(for|took|take(s)?) ([a-zA-Z0-9, ]{0,20})(seconds|minute|hour|day|week|month)+)|hours of computation)";
constexpr std::string_view kEnergyPattern =
    R"((energy|power|electricity) (consumption|usage)|(is|of|at) [1-9]{1}[0-9]{2,5} (watt(s)?|(k)?w) | pue)";
constexpr std::string_view kLocationPattern =
    R"(((data ?center|(a|the) cloud|(virtual|gpu) machine|computer cluster|hpc) (is )?(at|in) )|(cloud|azure|google|aws)([a-zA-Z0-9, ]{0,20})region)";
constexpr std::string_view kEmissionPattern =
    R"((co2(e|eq)?|ghg|carbon) (footprint|emission(s)?|emitted|offset(ting)?))";
constexpr std::string_view kDeepLearningPattern =
    R"(deep learning|neural network|lstm|recurrent neural network|rnn|transformer|mlp|convolutional neural network|cnn|gpt)";

boost::regex Compile(std::string_view pattern) {
  return boost::regex(pattern.begin(), pattern.end(), boost::regex::perl | boost::regex::icase);
}

struct CompiledPatterns {
  std::array<boost::regex, kDimensionCount> dimensions;
  boost::regex deep_learning;
};

const CompiledPatterns& Patterns() {
  static const CompiledPatterns patterns = [] {
    CompiledPatterns compiled;
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      compiled.dimensions[i] = Compile(PatternFor(kAllDimensions[i]));
    }
    compiled.deep_learning = Compile(kDeepLearningPattern);
    return compiled;
  }();
  return patterns;
}

std::optional<std::size_t> FirstMatch(std::string_view text, const boost::regex& pattern) {
  boost::match_results<std::string_view::const_iterator> match;
  if (!boost::regex_search(text.begin(), text.end(), match, pattern)) return std::nullopt;
  return static_cast<std::size_t>(match.position(static_cast<boost::match_results<std::string_view::const_iterator>::size_type>(0)));
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Removes "-<blanks><line break><whitespace>" between two word characters.
std::string RepairHyphenation(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '-' && !out.empty() && IsWordChar(out.back())) {
      std::size_t j = i + 1;
      while (j < raw.size() && (raw[j] == ' ' || raw[j] == '\t')) ++j;
      bool line_break = false;
      if (j < raw.size() && raw[j] == '\r') ++j, line_break = true;
      if (j < raw.size() && raw[j] == '\n') ++j, line_break = true;
      if (line_break) {
        while (j < raw.size() && IsSpace(raw[j])) ++j;
        if (j < raw.size() && IsWordChar(raw[j])) {
          i = j - 1;
          continue;
        }
      }
    }
    out.push_back(raw[i]);
  }
  return out;
}

DocumentMatches Scan(const CorpusDocument& doc) {
  DocumentMatches result{doc.id, doc.year, false, {}};
  result.deep_learning = IsDeepLearning(doc.text);
  if (!result.deep_learning) return result;
  for (std::size_t i = 0; i < kDimensionCount; ++i) {
    result.first_match[i] = MatchDimension(doc.text, kAllDimensions[i]);
  }
  return result;
}

std::string Proportion(int matches, int total) {
  return RoundDecimal(static_cast<double>(matches) / total, 4);
}

}  // namespace

std::string_view ToString(SurveyDimension dimension) {
  switch (dimension) {
    case SurveyDimension::kPublicWeights:
      return "public_weights";
    case SurveyDimension::kDuration:
      return "duration";
    case SurveyDimension::kEnergy:
      return "energy";
    case SurveyDimension::kLocation:
      return "location";
    case SurveyDimension::kEmission:
      break;
  }
  return "emission";
}

std::string_view PatternFor(SurveyDimension dimension) {
  switch (dimension) {
    case SurveyDimension::kPublicWeights:
      return kPublicWeightsPattern;
    case SurveyDimension::kDuration:
      return kDurationPattern;
    case SurveyDimension::kEnergy:
      return kEnergyPattern;
    case SurveyDimension::kLocation:
      return kLocationPattern;
    case SurveyDimension::kEmission:
      break;
  }
  return kEmissionPattern;
}

std::string_view DeepLearningPattern() { return kDeepLearningPattern; }

std::string NormalizeText(std::string_view raw, bool repair_hyphenation) {
  std::string repaired;
  if (repair_hyphenation) {
    repaired = RepairHyphenation(raw);
    raw = repaired;
  }
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (IsSpace(c)) {
      if (out.empty() || out.back() != ' ') out.push_back(' ');
      continue;
    }
    out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::optional<std::size_t> MatchDimension(std::string_view normalized_text,
                                          SurveyDimension dimension) {
  return FirstMatch(normalized_text, Patterns().dimensions[static_cast<std::size_t>(dimension)]);
}

bool IsDeepLearning(std::string_view normalized_text) {
  return FirstMatch(normalized_text, Patterns().deep_learning).has_value();
}

std::vector<SurveyRecord> SurveyReport::Records() const {
  std::vector<SurveyRecord> records;
  for (const auto& [year, counts] : years) {
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      records.push_back(SurveyRecord{
          year, kAllDimensions[i], counts.dl_papers, counts.matches[i],
          static_cast<double>(counts.matches[i]) / static_cast<double>(counts.dl_papers)});
    }
  }
  return records;
}

SurveyReport Survey(std::span<const CorpusDocument> corpus, int threads) {
  std::vector<DocumentMatches> scanned(corpus.size());
  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(corpus.size(), 1));

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) scanned[i] = Scan(corpus[i]);
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
  }

  SurveyReport report;
  for (const auto& doc : scanned) {
    if (!doc.deep_learning) continue;
    YearCounts& counts = report.years[doc.year];
    ++counts.dl_papers;
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      if (doc.first_match[i]) ++counts.matches[i];
    }
  }
  std::sort(scanned.begin(), scanned.end(),
            [](const DocumentMatches& a, const DocumentMatches& b) { return a.id < b.id; });
  report.documents = std::move(scanned);
  return report;
}

std::vector<CorpusDocument> LoadCorpusJsonl(std::istream& in, bool repair_hyphenation) {
  std::vector<CorpusDocument> corpus;
  std::map<std::string, int> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fail = [&](const std::string& message) -> ParseError {
      return ParseError("line " + std::to_string(line_number) + ": " + message, line_number);
    };

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw fail("malformed JSON record");
    }
    if (!record.is_object()) throw fail("record must be a JSON object");
    for (const char* key : {"id", "venue", "text"}) {
      if (!record.contains(key)) throw fail(std::string("record is missing '") + key + "'");
      if (!record[key].is_string()) throw fail(std::string("'") + key + "' must be a string");
    }
    if (!record.contains("year")) throw fail("record is missing 'year'");
    if (!record["year"].is_number_integer()) throw fail("'year' must be an integer");
    const auto year = record["year"].get<long long>();
    if (year < 1950 || year > 2100) throw fail("year " + std::to_string(year) + " is implausible");

    CorpusDocument doc{record["id"].get<std::string>(), static_cast<int>(year),
                       record["venue"].get<std::string>(),
                       NormalizeText(record["text"].get<std::string>(), repair_hyphenation)};
    if (auto [it, inserted] = seen.emplace(doc.id, line_number); !inserted) {
      throw ParseError("duplicate document id '" + doc.id + "' on lines " +
                           std::to_string(it->second) + " and " + std::to_string(line_number),
                       line_number);
    }
    corpus.push_back(std::move(doc));
  }
  if (in.bad()) throw ParseError("read error", line_number);
  return corpus;
}

std::vector<CorpusDocument> LoadCorpusJsonlFile(const std::filesystem::path& path,
                                                bool repair_hyphenation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus " + path.string());
  try {
    return LoadCorpusJsonl(in, repair_hyphenation);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  }
}

void WriteSurveyReport(const SurveyReport& report, std::ostream& out) {
  out << "# year  dl_papers";
  for (auto dimension : kAllDimensions) out << "  " << ToString(dimension);
  out << "\n";
  for (const auto& [year, counts] : report.years) {
    out << "# " << year << "  " << counts.dl_papers;
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      out << "  " << Proportion(counts.matches[i], counts.dl_papers) << " (" << counts.matches[i]
          << "/" << counts.dl_papers << ")";
    }
    out << "\n";
  }
  for (const auto& record : report.Records()) {
    nlohmann::ordered_json line;
    line["year"] = record.year;
    line["dimension"] = ToString(record.dimension);
    line["dl_papers"] = record.dl_papers;
    line["matches"] = record.matches;
    line["proportion"] = record.proportion;
    out << line.dump() << "\n";
  }
}

void WriteDocumentMatches(const SurveyReport& report, std::ostream& out) {
  for (const auto& doc : report.documents) {
    nlohmann::ordered_json line;
    line["id"] = doc.id;
    line["year"] = doc.year;
    line["deep_learning"] = doc.deep_learning;
    for (std::size_t i = 0; i < kDimensionCount; ++i) {
      const auto key = std::string(ToString(kAllDimensions[i]));
      if (doc.first_match[i]) {
        line[key] = *doc.first_match[i];
      } else {
        line[key] = nullptr;
      }
    }
    out << line.dump() << "\n";
  }
}

}  // namespace climatecard
