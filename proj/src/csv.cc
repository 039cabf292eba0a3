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

#include "csv.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "climatecard/error.h"

namespace climatecard::internal {
namespace {

std::vector<std::string> SplitLine(const std::string& line, int line_number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool after_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (c == '"' && field.empty() && !after_quote) {
      quoted = true;
    } else if (after_quote) {
      throw ParseError("line " + std::to_string(line_number) + ", column " +
                           std::to_string(fields.size() + 1) +
                           ": unexpected character after closing quote",
                       line_number, static_cast<int>(fields.size() + 1));
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw ParseError("line " + std::to_string(line_number) + ", column " +
                         std::to_string(fields.size() + 1) + ": unterminated quoted field",
                     line_number, static_cast<int>(fields.size() + 1));
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::vector<CsvRow> ReadCsv(std::istream& in, std::string_view header) {
  std::vector<CsvRow> rows;
  std::string line;
  int line_number = 0;
  bool seen_header = false;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty() || line.front() == '#') continue;

    if (!seen_header) {
      if (line != header) {
        throw ParseError("line " + std::to_string(line_number) + ": expected header '" +
                             std::string(header) + "', got '" + line + "'",
                         line_number);
      }
      seen_header = true;
      columns = SplitLine(line, line_number).size();
      continue;
    }

    CsvRow row{line_number, SplitLine(line, line_number)};
    if (row.fields.size() != columns) {
      const int column = static_cast<int>(std::min(row.fields.size(), columns) + 1);
      throw ParseError("line " + std::to_string(line_number) + ", column " +
                           std::to_string(column) + ": expected " + std::to_string(columns) +
                           " fields, got " + std::to_string(row.fields.size()),
                       line_number, column);
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) throw ParseError("read error", line_number);
  if (!seen_header) {
    throw ParseError("missing header '" + std::string(header) + "'", line_number);
  }
  return rows;
}

std::string_view TrimField(std::string_view field) {
  const auto first = field.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = field.find_last_not_of(" \t");
  return field.substr(first, last - first + 1);
}

std::optional<double> ParseDouble(std::string_view text) {
  text = TrimField(text);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<long long> ParseInteger(std::string_view text) {
  text = TrimField(text);
  if (text.empty()) return std::nullopt;
  long long value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string CsvField(std::string_view value) {
  const bool needs_quotes = value.find_first_of(",\"") != std::string_view::npos ||
                            (!value.empty() && (value.front() == ' ' || value.back() == ' '));
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace climatecard::internal
