// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROUNDML_TOOLS_COMMANDS_HPP_
#define GROUNDML_TOOLS_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace groundml::cli {

// Environment variable consulted for --threads when the flag is absent.
inline constexpr const char* kThreadsEnv = "GROUNDML_THREADS";

// Name of the run manifest every command writes into its output directory.
inline constexpr const char* kManifestName = "manifest.ini";

// Parses args (without the program name) and runs the selected subcommand.
// Returns the process exit code: 0 on success, 1 for runtime and I/O
// failures, 2 for invalid configuration, CLI11 codes for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace groundml::cli

#endif  // GROUNDML_TOOLS_COMMANDS_HPP_
