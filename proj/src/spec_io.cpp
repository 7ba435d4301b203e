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

#include "definetti/spec_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace definetti {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Interval parse_interval(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 5) throw std::invalid_argument("malformed interval: '" + std::string(text) + "'");
  char open = t.front(), close = t.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']')) {
    throw std::invalid_argument("interval must be written (a,b), [0,b), (a,1] or [0,1]: '" + std::string(text) + "'");
  }
  std::vector<std::string_view> ends = split(t.substr(1, t.size() - 2), ',');
  if (ends.size() != 2) throw std::invalid_argument("interval needs two endpoints: '" + std::string(text) + "'");
  Rational lo = parse_rational(ends[0]);
  Rational hi = parse_rational(ends[1]);
  if (open == '[') {
    if (lo != 0) throw std::invalid_argument("only 0 may be a closed left endpoint: '" + std::string(text) + "'");
    lo = kLowSentinel;
  }
  if (close == ']') {
    if (hi != 1) throw std::invalid_argument("only 1 may be a closed right endpoint: '" + std::string(text) + "'");
    hi = kHighSentinel;
  }
  return {lo, hi};
}

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}

std::string kind_field(const json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument("spec must be a JSON object");
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::invalid_argument(std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

std::vector<MixtureComponent> components_field(const json& j) {
  if (!j.contains("components") || !j.at("components").is_array()) {
    throw std::invalid_argument("missing array field 'components'");
  }
  std::vector<MixtureComponent> out;
  for (const json& c : j.at("components")) out.push_back({rational_field(c, "weight"), rational_field(c, "p")});
  return out;
}

json components_json(const std::vector<MixtureComponent>& components) {
  json arr = json::array();
  for (const MixtureComponent& c : components) {
    arr.push_back({{"weight", to_fraction_string(c.weight)}, {"p", to_fraction_string(c.p)}});
  }
  return arr;
}

std::string interval_text(const Interval& iv) { return OpenIntervalSet::interval(iv.lo, iv.hi).to_string(); }

}  // namespace

OpenIntervalSet parse_set(std::string_view text) {
  std::string_view t = trim(text);
  if (t == "{}") return OpenIntervalSet::empty_set();
  std::vector<Interval> parts;
  for (std::string_view piece : split(t, '|')) parts.push_back(parse_interval(piece));
  return normalize(std::move(parts));
}

SetTuple parse_tuple(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("empty set list");
  SetTuple out;
  for (std::string_view coord : split(text, ';')) out.push_back(parse_set(coord));
  return out;
}

ConstraintMatrix parse_matrix(std::string_view text) {
  if (trim(text).empty()) throw std::invalid_argument("empty constraint matrix");
  std::vector<std::vector<Rational>> rows;
  for (std::string_view row : split(text, ';')) {
    std::vector<Rational> r;
    for (std::string_view entry : split(row, ',')) r.push_back(parse_rational(entry));
    rows.push_back(std::move(r));
  }
  return ConstraintMatrix(std::move(rows));
}

std::vector<Fuel> parse_fuels(std::string_view text) {
  std::string_view t = trim(text);
  auto number = [](std::string_view s) {
    s = trim(s);
    Rational r = parse_rational(s);
    if (r.get_den() != 1 || r <= 0 || r > 1000000) {
      throw std::invalid_argument("fuel must be a positive integer: '" + std::string(s) + "'");
    }
    return static_cast<Fuel>(r.get_num().get_ui());
  };
  std::vector<Fuel> out;
  if (std::size_t dots = t.find(".."); dots != std::string_view::npos) {
    Fuel a = number(t.substr(0, dots));
    Fuel b = number(t.substr(dots + 2));
    if (b < a) throw std::invalid_argument("empty fuel range");
    for (Fuel f = a; f <= b; ++f) out.push_back(f);
    return out;
  }
  for (std::string_view piece : split(t, ',')) {
    Fuel f = number(piece);
    if (!out.empty() && f <= out.back()) throw std::invalid_argument("fuels must be strictly increasing");
    out.push_back(f);
  }
  return out;
}

ProcessSpec process_from_json(const json& j) {
  std::string kind = kind_field(j, "process");
  ProcessSpec spec;
  if (kind == "polya") {
    spec = ProcessSpec::polya(rational_field(j, "alpha"), rational_field(j, "beta"));
  } else if (kind == "iid_uniform") {
    spec = ProcessSpec::iid_uniform();
  } else if (kind == "constant_uniform") {
    spec = ProcessSpec::constant_uniform();
  } else if (kind == "constant_atom") {
    spec = ProcessSpec::constant_atom(rational_field(j, "atom"));
  } else if (kind == "iid_bernoulli_mixture") {
    spec = ProcessSpec::bernoulli_mixture(components_field(j));
  } else if (kind == "tabulated") {
    spec.kind = ProcessKind::kTabulated;
    spec.exact = j.value("exact", false);
    if (!j.contains("entries") || !j.at("entries").is_array()) throw std::invalid_argument("missing array 'entries'");
    for (const json& e : j.at("entries")) {
      TabulatedOracle::Entry entry;
      if (!e.contains("box") || !e.at("box").is_array()) throw std::invalid_argument("entry needs a 'box' array");
      for (const json& side : e.at("box")) {
        if (!side.is_string()) throw std::invalid_argument("box sides must be interval strings");
        entry.box.push_back(parse_interval(side.get<std::string>()));
      }
      if (e.contains("fuel")) {
        if (!e.at("fuel").is_number_unsigned()) throw std::invalid_argument("entry fuel must be a positive integer");
        entry.fuel = e.at("fuel").get<Fuel>();
      }
      entry.lower = rational_field(e, "lower");
      spec.entries.push_back(std::move(entry));
    }
  } else {
    throw std::invalid_argument("unknown process '" + kind + "'");
  }
  spec.validate();
  return spec;
}

json process_to_json(const ProcessSpec& spec) {
  json j;
  j["process"] = process_name(spec.kind);
  switch (spec.kind) {
    case ProcessKind::kPolya:
      j["alpha"] = to_fraction_string(spec.alpha);
      j["beta"] = to_fraction_string(spec.beta);
      break;
    case ProcessKind::kConstantAtom:
      j["atom"] = to_fraction_string(spec.atom);
      break;
    case ProcessKind::kIidBernoulliMixture:
      j["components"] = components_json(spec.components);
      break;
    case ProcessKind::kTabulated: {
      j["exact"] = spec.exact;
      json entries = json::array();
      for (const TabulatedOracle::Entry& e : spec.entries) {
        json box = json::array();
        for (const Interval& iv : e.box) box.push_back(interval_text(iv));
        entries.push_back({{"box", box}, {"fuel", e.fuel}, {"lower", to_fraction_string(e.lower)}});
      }
      j["entries"] = entries;
      break;
    }
    case ProcessKind::kIidUniform:
    case ProcessKind::kConstantUniform:
      break;
  }
  return j;
}

MeasureSpec measure_from_json(const json& j) {
  std::string kind = kind_field(j, "measure");
  MeasureSpec spec;
  if (kind == "beta_bernoulli") {
    spec = MeasureSpec::beta_bernoulli(rational_field(j, "alpha"), rational_field(j, "beta"));
  } else if (kind == "dirac_at_uniform") {
    spec = MeasureSpec::dirac_at_uniform();
  } else if (kind == "uniform_on_diracs") {
    spec = MeasureSpec::uniform_on_diracs();
  } else if (kind == "dirac_at_atom") {
    spec = MeasureSpec::dirac_at_atom(rational_field(j, "atom"));
  } else if (kind == "bernoulli_mixture") {
    spec = MeasureSpec::bernoulli_mixture(components_field(j));
  } else if (kind == "definetti_oracle") {
    if (!j.contains("process")) throw std::invalid_argument("definetti_oracle needs a 'process' object");
    spec = MeasureSpec::definetti_oracle(process_from_json(j.at("process")));
  } else {
    throw std::invalid_argument("unknown measure '" + kind + "'");
  }
  spec.validate();
  return spec;
}

json measure_to_json(const MeasureSpec& spec) {
  json j;
  j["measure"] = measure_name(spec.kind);
  switch (spec.kind) {
    case MeasureKind::kBetaBernoulli:
      j["alpha"] = to_fraction_string(spec.alpha);
      j["beta"] = to_fraction_string(spec.beta);
      break;
    case MeasureKind::kDiracAtAtom:
      j["atom"] = to_fraction_string(spec.atom);
      break;
    case MeasureKind::kBernoulliMixture:
      j["components"] = components_json(spec.components);
      break;
    case MeasureKind::kDefinettiOracle:
      j["process"] = process_to_json(*spec.process);
      break;
    case MeasureKind::kDiracAtUniform:
    case MeasureKind::kUniformOnDiracs:
      break;
  }
  return j;
}

json transform_to_json(const TransformResult& result) {
  json j = measure_to_json(result.output);
  j["verified_depth"] = result.verified_depth;
  j["status"] = result.status;
  j["input"] = process_to_json(result.input);
  j["notes"] = result.notes;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_tsv(std::ostream& out, const std::vector<BoundRow>& rows, bool with_upper) {
  out << "fuel\tlower_rational\tlower_decimal";
  if (with_upper) out << "\tupper_rational\tupper_decimal";
  out << '\n';
  for (const BoundRow& r : rows) {
    out << r.fuel << '\t' << to_fraction_string(r.lower) << '\t' << to_decimal_string(r.lower, 10);
    if (with_upper) {
      Rational u = r.upper.value_or(Rational(1));
      out << '\t' << to_fraction_string(u) << '\t' << to_decimal_string(u, 10);
    }
    out << '\n';
  }
}

void write_json_table(std::ostream& out, const std::vector<BoundRow>& rows, bool with_upper) {
  json arr = json::array();
  for (const BoundRow& r : rows) {
    json row = {{"fuel", r.fuel},
                {"lower_rational", to_fraction_string(r.lower)},
                {"lower_decimal", to_decimal_string(r.lower, 10)}};
    if (with_upper) {
      Rational u = r.upper.value_or(Rational(1));
      row["upper_rational"] = to_fraction_string(u);
      row["upper_decimal"] = to_decimal_string(u, 10);
    }
    arr.push_back(row);
  }
  out << arr.dump(2) << '\n';
}

}  // namespace definetti
