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

// Text formats: JSON process and measure files, command-line set/matrix/fuel
// lists, and bound tables.
//
// Sets: "(a,b)", "[0,b)", "(a,1]", "[0,1]" or "{}"; unions joined by '|';
// coordinates of a tuple separated by ';'. Rationals are "p/q" or integers.

#ifndef DEFINETTI_SPEC_IO_HPP_
#define DEFINETTI_SPEC_IO_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "definetti/interval_algebra.hpp"
#include "definetti/numbers.hpp"
#include "definetti/processes.hpp"

namespace definetti {

// All parse errors are std::invalid_argument.
OpenIntervalSet parse_set(std::string_view text);
SetTuple parse_tuple(std::string_view text);
ConstraintMatrix parse_matrix(std::string_view text);
// "1,2,5" or "1..6"; positive and strictly increasing.
std::vector<Fuel> parse_fuels(std::string_view text);

ProcessSpec process_from_json(const nlohmann::json& j);
nlohmann::json process_to_json(const ProcessSpec& spec);
MeasureSpec measure_from_json(const nlohmann::json& j);
nlohmann::json measure_to_json(const MeasureSpec& spec);
nlohmann::json transform_to_json(const TransformResult& result);

// Reads and parses a JSON file; std::invalid_argument on any failure.
nlohmann::json read_json_file(const std::string& path);

struct BoundRow {
  Fuel fuel = 0;
  Rational lower;
  std::optional<Rational> upper;
};

void write_tsv(std::ostream& out, const std::vector<BoundRow>& rows, bool with_upper);
void write_json_table(std::ostream& out, const std::vector<BoundRow>& rows, bool with_upper);

}  // namespace definetti

#endif  // DEFINETTI_SPEC_IO_HPP_
