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

// Survey of climate-related reporting in a corpus of paper texts.
//
// A document "discusses" a dimension if the dimension's pattern matches its
// normalized text at least once. Only deep-learning documents (those
// matching DeepLearningPattern()) are counted; for each year the proportion
// is matches / deep-learning documents.

#ifndef CLIMATECARD_SURVEY_H_
#define CLIMATECARD_SURVEY_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace climatecard {

enum class SurveyDimension { kPublicWeights, kDuration, kEnergy, kLocation, kEmission };

inline constexpr std::size_t kDimensionCount = 5;
inline constexpr std::array<SurveyDimension, kDimensionCount> kAllDimensions = {
    SurveyDimension::kPublicWeights, SurveyDimension::kDuration, SurveyDimension::kEnergy,
    SurveyDimension::kLocation, SurveyDimension::kEmission,
};

// "public_weights", "duration", "energy", "location", "emission".
std::string_view ToString(SurveyDimension dimension);

// The pattern strings, verbatim. Note the literal spaces: the energy pattern
// has a branch ending in "w) " and a branch " pue".
std::string_view PatternFor(SurveyDimension dimension);
std::string_view DeepLearningPattern();

// Lowercases ASCII, collapses every whitespace run to a single space and,
// with `repair_hyphenation`, first rejoins words split as "word-\nword".
std::string NormalizeText(std::string_view raw, bool repair_hyphenation = false);

// Byte offset of the leftmost match in `normalized_text`, if any. Matching
// is case-insensitive.
std::optional<std::size_t> MatchDimension(std::string_view normalized_text,
                                          SurveyDimension dimension);
bool IsDeepLearning(std::string_view normalized_text);

struct CorpusDocument {
  std::string id;
  int year = 0;
  std::string venue;
  std::string text;  // normalized
};

struct DocumentMatches {
  std::string id;
  int year = 0;
  bool deep_learning = false;
  // First-match offset per dimension, indexed like kAllDimensions. Left
  // empty for documents that are not deep-learning related.
  std::array<std::optional<std::size_t>, kDimensionCount> first_match;
};

struct YearCounts {
  int dl_papers = 0;
  std::array<int, kDimensionCount> matches{};
};

struct SurveyRecord {
  int year = 0;
  SurveyDimension dimension = SurveyDimension::kPublicWeights;
  int dl_papers = 0;
  int matches = 0;
  double proportion = 0.0;  // matches / dl_papers

  friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyReport {
  // Years with at least one deep-learning document.
  std::map<int, YearCounts> years;
  // Every document, ordered by id.
  std::vector<DocumentMatches> documents;

  // One record per (year, dimension), ordered by year then dimension.
  std::vector<SurveyRecord> Records() const;
};

// Expects normalized text (see LoadCorpusJsonl). `threads` <= 0 picks the
// hardware concurrency. The result does not depend on document order.
SurveyReport Survey(std::span<const CorpusDocument> corpus, int threads = 0);

// JSON Lines, one object per line with string "id", integer "year", string
// "venue" and string "text". Blank lines are skipped. Text is normalized on
// load. Throws ParseError naming the line; duplicate ids name both lines.
std::vector<CorpusDocument> LoadCorpusJsonl(std::istream& in, bool repair_hyphenation = false);
std::vector<CorpusDocument> LoadCorpusJsonlFile(const std::filesystem::path& path,
                                                bool repair_hyphenation = false);

// Human-readable table as `#` comment lines followed by one JSON record per
// (year, dimension) with keys year, dimension, dl_papers, matches,
// proportion.
void WriteSurveyReport(const SurveyReport& report, std::ostream& out);

// One JSON object per document: id, year, deep_learning, and the first-match
// offset (or null) per dimension.
void WriteDocumentMatches(const SurveyReport& report, std::ostream& out);

}  // namespace climatecard

#endif  // CLIMATECARD_SURVEY_H_
