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

#include <iostream>

#include <CLI11.hpp>

#include "definetti/commands.hpp"

namespace {

void add_format(CLI::App* cmd, definetti::CommandOptions& o) {
  cmd->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"tsv", "json"}));
}

void add_fuel(CLI::App* cmd, definetti::CommandOptions& o) {
  cmd->add_option("--fuel", o.fuels, "Fuel schedule, e.g. 1..6 or 1,2,8");
}

}  // namespace

int main(int argc, char** argv) {
  using definetti::CommandOptions;
  CLI::App app{"Bounds on de Finetti mixing measures of exchangeable sequences"};
  app.require_subcommand(1);
  CommandOptions o;

  CLI::App* query = app.add_subcommand("query", "Lower bounds on Pr(U_i cap_j {V_pi_j > c_ij}) from a process spec");
  query->add_option("--spec", o.spec, "Process spec: JSON file or inline JSON")->required();
  query->add_option("--pi", o.pi, "Sets pi_j separated by ';', e.g. \"(1/2,1]\"");
  query->add_option("--constraints", o.constraints, "Threshold matrix: rows ';', entries ','");
  query->add_option("--box", o.box, "Instead of a mixing query, bracket Pr(X in box)");
  query->add_flag("--assume-continuous", o.assume_continuous,
                  "Assert the mixing measure is a.s. continuous and add upper bounds");
  add_fuel(query, o);
  add_format(query, o);

  CLI::App* transform = app.add_subcommand("transform", "Rewrite a process spec into its mixing measure");
  transform->add_option("--spec", o.spec, "Process spec: JSON file or inline JSON")->required();
  transform->add_option("--output", o.output, "Write the result here instead of stdout");

  CLI::App* forward = app.add_subcommand("forward", "Lower bounds on box probabilities from a measure spec");
  forward->add_option("--spec", o.spec, "Measure spec: JSON file or inline JSON")->required();
  forward->add_option("--box", o.box, "Box sigma, sets separated by ';'")->required();
  add_fuel(forward, o);
  add_format(forward, o);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--only", o.only, "Comma-separated check ids (1..9)");

  CLI::App* sample = app.add_subcommand("sample", "Draw from a process with a seeded sampler");
  sample->add_option("--spec", o.spec, "Process spec: JSON file or inline JSON")->required();
  sample->add_option("--seed", o.seed, "Generator seed");
  sample->add_option("--count", o.count, "Number of draws")->check(CLI::PositiveNumber);

  CLI::App* poly = app.add_subcommand("poly", "Print the certified polynomial under the indicator of a box");
  poly->add_option("--box", o.box, "Box sigma, sets separated by ';'")->required();
  poly->add_option("--n", o.degree_n, "Approximation index n >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : definetti::kExitUsage;
  }

  if (*query) return definetti::cmd_query(o, std::cout, std::cerr);
  if (*transform) return definetti::cmd_transform(o, std::cout, std::cerr);
  if (*forward) return definetti::cmd_forward(o, std::cout, std::cerr);
  if (*selftest) return definetti::cmd_selftest(o, std::cout, std::cerr);
  if (*sample) return definetti::cmd_sample(o, std::cout, std::cerr);
  if (*poly) return definetti::cmd_poly(o, std::cout, std::cerr);
  return definetti::kExitUsage;
}
