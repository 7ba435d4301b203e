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

#include "definetti/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "definetti/acceptance.hpp"
#include "definetti/definetti_core.hpp"
#include "definetti/processes.hpp"
#include "definetti/spec_io.hpp"

namespace definetti {

using nlohmann::json;

namespace {

// Usage and spec errors arrive as std::invalid_argument (exit 2); anything
// else is a failure (exit 1).
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

json load_spec(const CommandOptions& options) {
  if (options.spec.empty()) throw std::invalid_argument("--spec is required");
  std::size_t first = options.spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && options.spec[first] == '{') {
    try {
      return json::parse(options.spec);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed inline spec: ") + e.what());
    }
  }
  return read_json_file(options.spec);
}

void require_format(const CommandOptions& options) {
  if (options.format != "tsv" && options.format != "json") {
    throw std::invalid_argument("--format must be tsv or json");
  }
}

void emit(const CommandOptions& options, std::ostream& out, const std::vector<BoundRow>& rows, bool with_upper) {
  if (options.format == "json") {
    write_json_table(out, rows, with_upper);
  } else {
    write_tsv(out, rows, with_upper);
  }
}

// One row per fuel; lower columns take running maxima and upper columns
// running minima, which keeps every printed bound sound.
std::vector<BoundRow> table(const std::vector<Fuel>& fuels, const std::function<BoundRow(Fuel)>& row_at) {
  std::vector<BoundRow> rows;
  for (Fuel f : fuels) {
    BoundRow r = row_at(f);
    if (!rows.empty()) {
      r.lower = max_of(r.lower, rows.back().lower);
      if (r.upper && rows.back().upper) r.upper = min_of(*r.upper, *rows.back().upper);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

int cmd_query(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_format(options);
    ProcessSpec spec = process_from_json(load_spec(options));
    std::vector<Fuel> fuels = parse_fuels(options.fuels);
    std::shared_ptr<const MarginalOracle> chi = as_marginal_oracle(spec);
    if (!options.box.empty()) {
      if (!options.pi.empty() || !options.constraints.empty()) {
        throw std::invalid_argument("--box cannot be combined with --pi/--constraints");
      }
      SetTuple sigma = parse_tuple(options.box);
      emit(options, out, table(fuels, [&](Fuel f) {
             return BoundRow{f, algebra_lower(*chi, sigma, f), closed_upper(*chi, sigma, f)};
           }),
           true);
      return kExitOk;
    }
    if (options.pi.empty() || options.constraints.empty()) {
      throw std::invalid_argument("query needs --pi and --constraints, or --box");
    }
    DeFinettiQuery q{parse_tuple(options.pi), parse_matrix(options.constraints)};
    if (q.pi.size() != q.c.cols()) {
      throw std::invalid_argument("--pi has " + std::to_string(q.pi.size()) + " sets but --constraints has " +
                                  std::to_string(q.c.cols()) + " columns");
    }
    if (options.assume_continuous) {
      emit(options, out, table(fuels, [&](Fuel f) {
             Bracket b = definetti_bracket(*chi, q, ContinuityAssumption{true}, f);
             return BoundRow{f, b.lower, b.upper};
           }),
           true);
    } else {
      emit(options, out, table(fuels, [&](Fuel f) { return BoundRow{f, definetti_lower(*chi, q, f), std::nullopt}; }),
           false);
    }
    return kExitOk;
  });
}

int cmd_transform(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProcessSpec spec = process_from_json(load_spec(options));
    TransformResult result = transform_process(spec);
    std::string text = transform_to_json(result).dump(2) + "\n";
    if (options.output.empty()) {
      out << text;
    } else {
      std::ofstream file(options.output);
      if (!file) throw std::runtime_error("cannot write '" + options.output + "'");
      file << text;
      err << result.status << ": wrote " << options.output << '\n';
    }
    return kExitOk;
  });
}

int cmd_forward(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_format(options);
    MeasureSpec measure = measure_from_json(load_spec(options));
    if (options.box.empty()) throw std::invalid_argument("forward needs --box");
    SetTuple sigma = parse_tuple(options.box);
    std::vector<Fuel> fuels = parse_fuels(options.fuels);
    DeFinettiMeasureRepr mu = as_mu_oracle(measure);
    emit(options, out, table(fuels, [&](Fuel f) { return BoundRow{f, chi_from_mu(mu, sigma, f), std::nullopt}; }),
         false);
    return kExitOk;
  });
}

int cmd_selftest(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::set<int> only;
    if (!options.only.empty()) {
      std::stringstream in(options.only);
      std::string item;
      while (std::getline(in, item, ',')) {
        Rational id = parse_rational(item);
        if (id.get_den() != 1 || id < 1 || id > kCriterionCount) {
          throw std::invalid_argument("--only takes criterion ids 1.." + std::to_string(kCriterionCount));
        }
        only.insert(static_cast<int>(id.get_num().get_si()));
      }
    }
    AcceptanceHooks hooks;
    hooks.progress = [&err](const std::string& line) { err << "  " << line << '\n'; };
    bool all = true;
    for (const CriterionResult& r : run_acceptance(hooks, only)) {
      out << result_line(r) << '\n';
      for (const std::string& d : r.details) out << "    " << d << '\n';
      out.flush();
      all = all && r.pass;
    }
    return all ? kExitOk : kExitFailure;
  });
}

int cmd_sample(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProcessSpec spec = process_from_json(load_spec(options));
    SamplerState state(spec, options.seed);
    std::vector<double> xs = sample_sequence(state, options.count);
    std::ostringstream text;
    text << std::setprecision(17);
    for (double x : xs) text << x << '\n';
    out << text.str();
    return kExitOk;
  });
}

int cmd_poly(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.box.empty()) throw std::invalid_argument("poly needs --box");
    if (options.degree_n < 2) throw std::invalid_argument("--n must be at least 2");
    BoxUnion region = BoxUnion::from_tuple(parse_tuple(options.box));
    std::shared_ptr<const BernsteinApprox> approx = bernstein_for(options.degree_n, region);
    const BernsteinCertificate& cert = approx->certificate();
    out << "# n " << options.degree_n << "\n# degrees";
    for (unsigned m : cert.degrees) out << ' ' << m;
    out << "\n# error_bound " << to_fraction_string(cert.error_bound) << "\n# budget "
        << to_fraction_string(cert.budget) << "\n# escalations " << cert.escalations << '\n';
    out << indicator_poly(options.degree_n, region)->dump();
    return kExitOk;
  });
}

}  // namespace definetti
