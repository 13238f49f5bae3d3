// Copyright 2026 The bosonic_mac Authors
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

#ifndef BOSONIC_MAC_CLI_HPP
#define BOSONIC_MAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bmac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumeric = 3;

/// Environment variable naming the directory for relative --output paths and figure bundles.
inline constexpr const char *kOutputDirEnv = "BMAC_OUTPUT_DIR";

/// Runs one subcommand. args excludes the program name. Artifacts go to out unless an
/// output path is given; diagnostics and usage go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bmac::cli

#endif
