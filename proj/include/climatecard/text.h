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

#ifndef CLIMATECARD_TEXT_H_
#define CLIMATECARD_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace climatecard {

// Trims, collapses inner whitespace runs to one space and lowercases ASCII
// letters. Registry keys are compared in this form.
std::string CanonicalKey(std::string_view text);

std::size_t EditDistance(std::string_view a, std::string_view b);

// Up to `limit` candidates closest to `query` by edit distance; ties are
// broken lexicographically.
std::vector<std::string> ClosestMatches(std::string_view query,
                                        std::span<const std::string> candidates,
                                        std::size_t limit = 3);

std::string Join(std::span<const std::string> parts, std::string_view separator);

}  // namespace climatecard

#endif  // CLIMATECARD_TEXT_H_
