// Copyright 2026 The definetti Authors.
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

// The subcommands behind the definetti executable. Each writes its result to
// `out`, diagnostics to `err`, and returns the process exit code.

#ifndef DEFINETTI_COMMANDS_HPP_
#define DEFINETTI_COMMANDS_HPP_

#include <cstdint>
#include <ostream>
#include <string>

namespace definetti {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  std::string spec;          // a JSON file, or inline JSON starting with '{'
  std::string pi;            // query sets, ';'-separated
  std::string constraints;   // threshold matrix, rows ';', entries ','
  std::string box;           // box sigma, ';'-separated
  std::string fuels = "1..6";
  bool assume_continuous = false;
  std::uint64_t seed = 0;
  std::size_t count = 10;
  unsigned degree_n = 2;     // poly: the index n of p_{n,sigma}
  std::string format = "tsv";
  std::string output;        // transform: file to write instead of `out`
  std::string only;          // selftest: comma-separated criterion ids
};

int cmd_query(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_transform(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_forward(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_selftest(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_sample(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_poly(const CommandOptions& options, std::ostream& out, std::ostream& err);

}  // namespace definetti

#endif  // DEFINETTI_COMMANDS_HPP_
