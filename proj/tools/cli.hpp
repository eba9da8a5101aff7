// Copyright 2026 The gaplab Authors
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


// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests can drive it in-process.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gaplab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultMaxX = 10'000'000'000ULL;

/// args excludes the program name. Primary output goes to `out` unless
/// --out names a file; diagnostics and the stdout-mode manifest go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as written to the manifest.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace gaplab::cli
