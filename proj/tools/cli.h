// Copyright 2026 The xxzswap Authors
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

#ifndef XXZSWAP_TOOLS_CLI_H
#define XXZSWAP_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace xxzswap::cli {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_USAGE = 2,
    EXIT_VERIFICATION_FAILED = 3,
    EXIT_SINGULARITY = 4,
};

inline constexpr uint64_t DEFAULT_SEED = 1234567;
/// Overrides DEFAULT_SEED when set and no --seed flag is given.
inline constexpr const char *SEED_ENV_VAR = "XXZSWAP_SEED";

/// Runs one command. `args` excludes the program name. Tables go to `out` unless
/// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace xxzswap::cli

#endif
