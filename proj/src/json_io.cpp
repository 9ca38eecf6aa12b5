#include "sumsets/json_io.hpp"

#include <fstream>
#include <string>

#include "sumsets/errors.hpp"

namespace sumsets {

namespace {

Json parse_stream(std::istream& in, const std::string& origin) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  return parse_stream(in, path.string());
}

const Json& field(const Json& json, const char* key) {
  const auto it = json.find(key);
  if (it == json.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

long long int_field(const Json& json, const char* key) {
  const Json& value = field(json, key);
  if (!value.is_number_integer()) {
    throw ParseError(std::string("field \"") + key + "\" must be an integer");
  }
  return value.get<long long>();
}

Json check_to_json(const BoundCheck& check) {
  return Json{{"name", check.name},
              {"lhs", check.lhs.str()},
              {"rhs", check.rhs.str()},
              {"op", check.op},
              {"pass", check.pass}};
}

}  // namespace

Json set_to_json(const SortedSet& set) {
  Json array = Json::array();
  for (const Rational& value : set) array.push_back(format_rational(value));
  return array;
}

SortedSet set_from_json(const Json& json) {
  if (!json.is_array()) throw ParseError("a set must be a JSON array of strings");
  std::vector<Rational> values;
  values.reserve(json.size());
  for (const auto& item : json) {
    if (!item.is_string()) {
      throw ParseError("set entries must be strings like \"3\" or \"1/8\"");
    }
    values.push_back(parse_rational(item.get<std::string>()));
  }
  return make_set(std::move(values));
}

SortedSet read_set_file(const std::filesystem::path& path) {
  return set_from_json(load_file(path));
}

Json sigma_to_json(const SigmaMap& sigma) {
  Json array = Json::array();
  for (const std::size_t v : sigma.image) array.push_back(v);
  return array;
}

SigmaMap sigma_from_json(const Json& json) {
  if (!json.is_array()) throw ParseError("sigma must be a JSON array of integers");
  SigmaMap sigma;
  sigma.image.reserve(json.size());
  for (const auto& item : json) {
    if (!item.is_number_integer() || item.get<long long>() < 1) {
      throw ParseError("sigma entries must be positive integers");
    }
    sigma.image.push_back(item.get<std::size_t>());
  }
  return sigma;
}

SigmaMap read_sigma_file(const std::filesystem::path& path) {
  return sigma_from_json(load_file(path));
}

Json census_to_json(const BlockCensus& census) {
  return Json{{"t", census.t},
              {"block_sizes", census.block_sizes},
              {"within_block_pairs", census.within_block_pairs},
              {"lower_bound", census.lower_bound},
              {"upper_bound", census.upper_bound}};
}

Json pair_witness_to_json(const PairWitness& witness) {
  return Json{{"i", witness.i},
              {"j", witness.j},
              {"low", format_rational(witness.low)},
              {"high", format_rational(witness.high)}};
}

Json bound_report_to_json(const BoundReport& report) {
  Json json;
  json["theorem"] = theorem_name(report.theorem);
  json["hypothesis_ok"] = report.hypothesis_ok;
  Json sizes = Json::object();
  if (report.sizes.k) sizes["k"] = *report.sizes.k;
  if (report.sizes.l) sizes["l"] = *report.sizes.l;
  if (report.sizes.l2) sizes["l2"] = *report.sizes.l2;
  if (report.sizes.m) sizes["m"] = *report.sizes.m;
  if (report.sizes.m2) sizes["m2"] = *report.sizes.m2;
  json["sizes"] = sizes;
  Json checks = Json::array();
  for (const BoundCheck& check : report.checks) checks.push_back(check_to_json(check));
  json["checks"] = checks;
  if (report.empirical) {
    json["empirical"] = Json{{"num", report.empirical->first.str()},
                             {"den", report.empirical->second.str()}};
  }
  if (report.delta) json["delta"] = format_rational(*report.delta);
  if (report.theorem == Theorem::T4) json["self_case"] = report.self_case;
  return json;
}

Json artifacts_to_json(const RuzsaArtifacts& artifacts) {
  Json listing = Json::array();
  for (const Rational& value : artifacts.listing.entries) {
    listing.push_back(format_rational(value));
  }
  return Json{{"S", set_to_json(artifacts.sidon)},
              {"S_scaled", set_to_json(artifacts.sidon_scaled)},
              {"L", listing},
              {"A", set_to_json(artifacts.constructed)},
              {"k", artifacts.k},
              {"sumset_size", artifacts.sumset_size}};
}

Json tightness_to_json(const TightnessReport& report) {
  Json checks = Json::array();
  for (const BoundCheck& check : report.checks) checks.push_back(check_to_json(check));
  return Json{{"k", report.k},
              {"sumset_size", report.sumset_size},
              {"checks", checks}};
}

Json record_to_json(const SearchRecord& record, bool include_timestamp) {
  Json json;
  json["v"] = 1;
  json["n"] = record.n;
  json["best_size"] = record.best_size;
  json["witness_diffs"] = record.witness_diffs;
  if (record.mode == SearchRecord::Mode::Exhaustive) {
    json["mode"] = "exhaustive";
    json["width_budget"] = record.width_budget;
    json["gcd_normalized"] = record.gcd_normalized;
  } else {
    json["mode"] = "anneal";
    json["steps"] = record.steps;
    json["seed"] = std::to_string(record.seed);  // decimal string: full 64-bit range
  }
  json["complete"] = record.complete;
  if (include_timestamp && record.timestamp) json["timestamp"] = *record.timestamp;
  return json;
}

SearchRecord record_from_json(const Json& json) {
  if (!json.is_object()) throw ParseError("record must be a JSON object");
  if (int_field(json, "v") != 1) throw ParseError("unsupported record version");
  SearchRecord record;
  record.n = static_cast<int>(int_field(json, "n"));
  record.best_size = int_field(json, "best_size");
  const Json& diffs = field(json, "witness_diffs");
  if (!diffs.is_array()) throw ParseError("field \"witness_diffs\" must be an array");
  for (const auto& item : diffs) {
    if (!item.is_number_integer()) {
      throw ParseError("witness entries must be integers");
    }
    record.witness_diffs.push_back(item.get<long long>());
  }
  const Json& mode = field(json, "mode");
  if (mode == "exhaustive") {
    record.mode = SearchRecord::Mode::Exhaustive;
    record.width_budget = int_field(json, "width_budget");
    record.gcd_normalized = field(json, "gcd_normalized").get<bool>();
  } else if (mode == "anneal") {
    record.mode = SearchRecord::Mode::Anneal;
    record.steps = int_field(json, "steps");
    const Json& seed = field(json, "seed");
    if (!seed.is_string()) throw ParseError("field \"seed\" must be a decimal string");
    const std::string text = seed.get<std::string>();
    std::size_t consumed = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(text, &consumed);
    } catch (const std::logic_error&) {
      consumed = 0;
    }
    if (consumed == 0 || consumed != text.size()) {
      throw ParseError("field \"seed\" is not a 64-bit decimal");
    }
    record.seed = value;
  } else {
    throw ParseError("unknown mode");
  }
  const Json& complete = field(json, "complete");
  if (!complete.is_boolean()) throw ParseError("field \"complete\" must be a boolean");
  record.complete = complete.get<bool>();
  if (json.contains("timestamp")) {
    record.timestamp = field(json, "timestamp").get<std::string>();
  }
  return record;
}

}  // namespace sumsets
