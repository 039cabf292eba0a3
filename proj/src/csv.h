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

// Minimal CSV reader for registry tables: fixed header, `#` comment lines,
// double-quoted fields with "" escapes. Not installed; library-internal.

#ifndef CLIMATECARD_SRC_CSV_H_
#define CLIMATECARD_SRC_CSV_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace climatecard::internal {

struct CsvRow {
  int line = 0;  // 1-based physical line number
  std::vector<std::string> fields;
};

// Reads all data rows. The first non-comment line must equal `header`
// exactly (after stripping a UTF-8 BOM and a trailing CR). Every row must
// have as many fields as the header. Throws ParseError.
std::vector<CsvRow> ReadCsv(std::istream& in, std::string_view header);

std::string_view TrimField(std::string_view field);

// Whole-field numeric parses; surrounding blanks are ignored.
std::optional<double> ParseDouble(std::string_view text);
std::optional<long long> ParseInteger(std::string_view text);

// Quotes a field when it contains a comma, quote or leading/trailing space.
std::string CsvField(std::string_view value);

}  // namespace climatecard::internal

#endif  // CLIMATECARD_SRC_CSV_H_
