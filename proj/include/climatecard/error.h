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

#ifndef CLIMATECARD_ERROR_H_
#define CLIMATECARD_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace climatecard {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity was constructed from a negative, NaN or infinite value.
class InvalidQuantityError : public Error {
 public:
  using Error::Error;
};

// A computation over valid inputs produced a non-finite result.
class InvalidResultError : public Error {
 public:
  using Error::Error;
};

// Malformed input data. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0)
      : Error(message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A registry lookup failed. Carries the closest known keys, if any.
class NotFoundError : public Error {
 public:
  NotFoundError(const std::string& message, std::vector<std::string> suggestions = {})
      : Error(message), suggestions_(std::move(suggestions)) {}

  const std::vector<std::string>& suggestions() const { return suggestions_; }

 private:
  std::vector<std::string> suggestions_;
};

}  // namespace climatecard

#endif  // CLIMATECARD_ERROR_H_
