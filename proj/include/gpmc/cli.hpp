// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   chi        -i INST                      expansion numbers and chi
//   color      -i INST [-o OUT]             optimal coloring
//   list-color -i INST --lists L [-o OUT]   list coloring
//   kernel     -i INST [--coloring C | --labels LB] [--ground IDS] [-o OUT]
//   verify coloring|list|kernel -i INST ...
//   gen        --seed S [--n N --max-parts P --max-cap K] [--bipartite]
//   oracle chi|list|kernel -i INST ...
//   bench      --seed S --trials T [--n N --max-parts P --max-cap K]
//
// Exit status: 0 success, 1 verification failed or no valid assignment,
// 2 malformed input, 3 internal invariant violation.

#ifndef GPMC_CLI_HPP_
#define GPMC_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>

#include "gpmc/error.hpp"

namespace gpmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitInternal = 3;

// kExitInternal for codes only a bug can raise, kExitMalformed otherwise.
int exit_status(ErrorCode code);

struct RunConfig {
  std::string command;
  // Second word of `verify` and `oracle`.
  std::string target;
  std::string instance;
  std::string coloring;
  std::string lists;
  std::string assignment;
  std::string labels;
  std::string kernel;
  std::string output;
  // Comma-separated element ids; empty means all elements.
  std::string ground;
  std::string format = "text";
  uint64_t seed = 0;
  int trials = 10;
  int n_elements = 8;
  int max_parts = 3;
  int max_cap = 2;
  bool bipartite = false;
  int verbosity = 0;
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs. Usage errors exit with kExitMalformed.
int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

}  // namespace gpmc::cli

#endif  // GPMC_CLI_HPP_
