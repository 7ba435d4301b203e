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

// The end-to-end acceptance checks (ids 1..9), shared by `definetti selftest`
// and the acceptance test binary.

#ifndef DEFINETTI_ACCEPTANCE_HPP_
#define DEFINETTI_ACCEPTANCE_HPP_

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "definetti/measure_oracles.hpp"
#include "definetti/poly_approx.hpp"

namespace definetti {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string summary;
  // Failures, with expected and actual values as exact rationals.
  std::vector<std::string> details;
};

// Fault injection for testing the checks themselves.
struct AcceptanceHooks {
  // Applied to every expanded polynomial before the domination check.
  std::function<Polynomial(const Polynomial&)> corrupt_polynomial;
  // Wraps every built-in sequence oracle handed to the engine.
  std::function<std::shared_ptr<const MarginalOracle>(std::shared_ptr<const MarginalOracle>)> wrap_oracle;
  // Stop the domination battery at its first failing case.
  bool fail_fast = false;
  // Receives one line per completed step; may be empty.
  std::function<void(const std::string&)> progress;
};

inline constexpr int kCriterionCount = 9;

// Runs the criteria in `only` (all when empty), in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceHooks& hooks = {}, const std::set<int>& only = {});

// "PASS <id>: <summary>" or "FAIL <id>: <summary>".
std::string result_line(const CriterionResult& r);

}  // namespace definetti

#endif  // DEFINETTI_ACCEPTANCE_HPP_
