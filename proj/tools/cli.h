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

#ifndef CLIMATECARD_TOOLS_CLI_H_
#define CLIMATECARD_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace climatecard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Directory holding energy_mix.csv and hardware.csv that replace the
// built-in tables.
inline constexpr char kDataDirEnv[] = "CLIMATECARD_DATA_DIR";

// Runs one command. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace climatecard::cli

#endif  // CLIMATECARD_TOOLS_CLI_H_
