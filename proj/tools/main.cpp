#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/bounds.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/json_io.hpp"
#include "sumsets/point_map.hpp"
#include "sumsets/record_store.hpp"
#include "sumsets/ruzsa.hpp"
#include "sumsets/search.hpp"
#include "sumsets/sigma.hpp"
#include "sumsets/sorted_set.hpp"
#include "sumsets/sumset.hpp"

namespace {

using sumsets::Json;

struct Options {
  bool quiet = false;
  std::string a_path;
  std::string b_path;
  std::string a2_path;
  std::string b2_path;
  std::string c_path;
  std::string verify_sigma_path;
  std::vector<std::string> decode_args;
  std::size_t t = 0;
  std::string method = "auto";
  std::string sidon_kind = "greedy";
  std::size_t sidon_size = 5;
  unsigned long long prime = 0;
  int theorem = 0;
  std::string map_spec = "power:2";
  std::string mode = "exhaustive";
  int n = 0;
  long long budget = 0;
  long long steps = 0;
  std::uint64_t seed = 0;
  std::string store_path;
  std::string records_path;
  int best_n = 0;
};

void emit(const Json& json) { std::cout << json.dump(2) << "\n"; }

std::ostream& note(const Options& options) {
  static std::ostream null_stream(nullptr);
  return options.quiet ? null_stream : std::cerr;
}

sumsets::PointMap parse_map_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "power") {
    std::size_t consumed = 0;
    unsigned long exponent = 0;
    try {
      exponent = std::stoul(rest, &consumed);
    } catch (const std::logic_error&) {
      consumed = 0;
    }
    if (consumed == 0 || consumed != rest.size() || exponent < 2) {
      throw sumsets::ParseError("map spec '" + spec + "': power needs an integer >= 2");
    }
    return sumsets::PointMap::power(static_cast<unsigned>(exponent));
  }
  if (kind == "poly") {
    std::vector<sumsets::Rational> coefficients;
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item =
          rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      coefficients.push_back(sumsets::parse_rational(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return sumsets::PointMap::polynomial(std::move(coefficients));
  }
  throw sumsets::ParseError("map spec '" + spec + "': use power:P or poly:c0,c1,...");
}

int run_check(const Options& options) {
  const sumsets::SortedSet a = sumsets::read_set_file(options.a_path);
  const bool convex = sumsets::is_convex(a);
  const bool distinct = sumsets::has_distinct_consecutive_differences(a);
  const bool sidon = sumsets::is_sidon(a);
  Json json;
  json["size"] = a.size();
  json["convex"] = convex;
  json["distinct_consecutive_differences"] = distinct;
  json["sidon"] = sidon;
  if (a.size() >= 2) {
    json["delta"] = sumsets::format_rational(sumsets::delta_ratio(a));
  } else {
    json["delta"] = nullptr;
  }
  emit(json);
  note(options) << "size " << a.size() << ", convex " << (convex ? "yes" : "no")
                << ", distinct diffs " << (distinct ? "yes" : "no") << ", Sidon "
                << (sidon ? "yes" : "no") << "\n";
  return 0;
}

int run_sumset(const Options& options) {
  const sumsets::SortedSet a = sumsets::read_set_file(options.a_path);
  const sumsets::SortedSet b = sumsets::read_set_file(options.b_path);
  const sumsets::SortedSet total = sumsets::sumset(a, b);
  emit(sumsets::set_to_json(total));
  note(options) << "|A+B| = " << total.size() << "\n";
  return 0;
}

int run_pairs(const Options& options) {
  const sumsets::SortedSet a = sumsets::read_set_file(options.a_path);
  const sumsets::SortedSet b = sumsets::read_set_file(options.b_path);
  if (!options.decode_args.empty()) {
    const sumsets::Rational low = sumsets::parse_rational(options.decode_args[0]);
    const sumsets::Rational high = sumsets::parse_rational(options.decode_args[1]);
    const auto decoded = sumsets::decode_pair(a, low, high, b);
    if (decoded) {
      emit(Json{{"i", decoded->i}, {"j", decoded->j}});
      note(options) << "decoded to (i=" << decoded->i << ", j=" << decoded->j << ")\n";
    } else {
      emit(Json(nullptr));
      note(options) << "not a pair of this instance\n";
    }
    return 0;
  }
  const std::vector<sumsets::PairWitness> pairs = sumsets::enumerate_pairs(a, b);
  Json json = Json::array();
  for (const sumsets::PairWitness& witness : pairs) {
    json.push_back(sumsets::pair_witness_to_json(witness));
  }
  emit(json);
  note(options) << pairs.size() << " pairs ((k-1)*l = " << (a.size() - 1) * b.size()
                << ")\n";
  return 0;
}

int run_census(const Options& options) {
  const sumsets::SortedSet a = sumsets::read_set_file(options.a_path);
  const sumsets::SortedSet b = sumsets::read_set_file(options.b_path);
  sumsets::CensusMethod method = sumsets::CensusMethod::Auto;
  if (options.method == "runlength") method = sumsets::CensusMethod::RunLength;
  if (options.method == "decode") method = sumsets::CensusMethod::DecodeSubsets;
  const sumsets::BlockCensus census = sumsets::block_pair_census(a, b, options.t, method);
  emit(sumsets::census_to_json(census));
  const bool lower_ok =
      static_cast<long long>(census.within_block_pairs) >= census.lower_bound;
  const bool upper_ok = census.within_block_pairs <= census.upper_bound;
  note(options) << census.within_block_pairs << " within-block pairs, bounds ["
                << census.lower_bound << ", " << census.upper_bound << "]"
                << (lower_ok && upper_ok ? "" : " VIOLATED") << "\n";
  return lower_ok && upper_ok ? 0 : 1;
}

int run_sigma(const Options& options) {
  const sumsets::SortedSet a = sumsets::read_set_file(options.a_path);
  const sumsets::SortedSet a2 = sumsets::read_set_file(options.a2_path);
  if (!options.verify_sigma_path.empty()) {
    const sumsets::SigmaMap sigma = sumsets::read_sigma_file(options.verify_sigma_path);
    const bool valid = sumsets::verify_sigma(a, a2, sigma);
    emit(Json{{"valid", valid}});
    note(options) << (valid ? "sigma separates the gap pairs\n"
                            : "sigma does not separate the gap pairs\n");
    return valid ? 0 : 1;
  }
  const auto sigma = sumsets::find_sigma(a, a2);
  if (!sigma) {
    emit(Json{{"sigma", nullptr}});
    note(options) << "no sigma exists\n";
    return 1;
  }
  emit(Json{{"sigma", sumsets::sigma_to_json(*sigma)}});
  note(options) << "found sigma on " << sigma->size() << " gap indices\n";
  return 0;
}

int run_construct(const Options& options) {
  sumsets::SortedSet sidon;
  if (options.sidon_kind == "greedy") {
    sidon = sumsets::greedy_sidon(options.sidon_size);
  } else {
    sidon = sumsets::modular_sidon(options.prime);
  }
  const sumsets::RuzsaArtifacts artifacts = sumsets::build_ruzsa_set(sidon);
  const sumsets::TightnessReport tightness = sumsets::tightness_report(artifacts);
  emit(Json{{"artifacts", sumsets::artifacts_to_json(artifacts)},
            {"tightness", sumsets::tightness_to_json(tightness)}});
  note(options) << "|S| = " << sidon.size() << ", k = " << artifacts.k
                << ", |A+[k]| = " << artifacts.sumset_size
                << (tightness.all_checks_pass() ? ", sandwich holds" : ", sandwich FAILED")
                << "\n";
  return tightness.all_checks_pass() ? 0 : 1;
}

int run_verify(const Options& options) {
  sumsets::BoundReport report;
  switch (options.theorem) {
    case 1:
      report = sumsets::check_theorem1(sumsets::read_set_file(options.a_path),
                                       sumsets::read_set_file(options.b_path));
      break;
    case 2:
      report = sumsets::check_theorem2(sumsets::read_set_file(options.a_path),
                                       sumsets::read_set_file(options.b_path));
      break;
    case 3:
      if (options.a2_path.empty() || options.b2_path.empty()) {
        throw sumsets::ParseError("--theorem 3 needs --A2 and --B2");
      }
      report = sumsets::check_theorem3(sumsets::read_set_file(options.a_path),
                                       sumsets::read_set_file(options.a2_path),
                                       sumsets::read_set_file(options.b_path),
                                       sumsets::read_set_file(options.b2_path));
      break;
    case 4:
      if (options.c_path.empty()) {
        throw sumsets::ParseError("--theorem 4 needs --C");
      }
      report = sumsets::check_theorem4(sumsets::read_set_file(options.a_path),
                                       sumsets::read_set_file(options.b_path),
                                       sumsets::read_set_file(options.c_path),
                                       parse_map_spec(options.map_spec));
      break;
    default:
      throw sumsets::ParseError("--theorem must be 1, 2, 3, or 4");
  }
  emit(sumsets::bound_report_to_json(report));
  const bool ok = report.hypothesis_ok && report.all_checks_pass();
  note(options) << sumsets::theorem_name(report.theorem) << ": hypothesis "
                << (report.hypothesis_ok ? "ok" : "FAILED") << ", checks "
                << (report.all_checks_pass() ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_search(const Options& options) {
  sumsets::SearchRecord record;
  if (options.mode == "exhaustive") {
    record = sumsets::exhaustive_min_sumset(options.n, options.budget);
  } else {
    if (options.steps < 1) {
      throw sumsets::ParseError("--mode anneal needs --steps >= 1");
    }
    record = sumsets::anneal_min_sumset(options.n, options.steps, options.seed);
  }
  if (!options.store_path.empty()) {
    sumsets::record_store_append(record, options.store_path);
  }
  // No timestamp on stdout: identical flags must give identical bytes.
  emit(sumsets::record_to_json(record, /*include_timestamp=*/false));
  note(options) << "n = " << record.n << ", best |A+A| = " << record.best_size
                << (record.complete ? " (complete within budget)" : "") << "\n";
  return 0;
}

int run_records(const Options& options) {
  const auto best = sumsets::record_store_best(options.best_n, options.records_path);
  if (!best) {
    emit(Json(nullptr));
    note(options) << "no record for n = " << options.best_n << "\n";
    return 0;
  }
  emit(sumsets::record_to_json(*best));
  note(options) << "best |A+A| = " << best->best_size << " for n = " << options.best_n
                << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  CLI::App app{"Exact sumset lower bounds for sets with distinct consecutive differences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", options.quiet, "suppress the summary on stderr");

  CLI::App* check = app.add_subcommand("check", "predicates and delta ratio of a set");
  check->add_option("--A", options.a_path, "set file")->required();

  CLI::App* sum = app.add_subcommand("sumset", "compute A+B");
  sum->add_option("--A", options.a_path, "set file")->required();
  sum->add_option("--B", options.b_path, "set file")->required();

  CLI::App* pairs = app.add_subcommand("pairs", "enumerate or decode the (k-1)*l pairs");
  pairs->add_option("--A", options.a_path, "set file")->required();
  pairs->add_option("--B", options.b_path, "set file")->required();
  pairs->add_option("--decode", options.decode_args, "decode one pair: LOW HIGH")
      ->expected(2);

  CLI::App* census = app.add_subcommand("census", "within-block pair census");
  census->add_option("--A", options.a_path, "set file")->required();
  census->add_option("--B", options.b_path, "set file")->required();
  census->add_option("--t", options.t, "number of blocks")->required();
  census->add_option("--method", options.method, "census method")
      ->check(CLI::IsMember({"auto", "runlength", "decode"}));

  CLI::App* sigma = app.add_subcommand("sigma", "find or verify a gap matching");
  sigma->add_option("--A", options.a_path, "set file")->required();
  sigma->add_option("--A2", options.a2_path, "set file")->required();
  sigma->add_option("--verify", options.verify_sigma_path, "sigma file to verify");

  CLI::App* construct = app.add_subcommand("construct", "build the near-tight example");
  construct->add_option("--sidon", options.sidon_kind, "Sidon set family")
      ->check(CLI::IsMember({"greedy", "modular"}));
  construct->add_option("--size", options.sidon_size, "greedy Sidon set size");
  construct->add_option("--prime", options.prime, "modular Sidon prime");

  CLI::App* verify = app.add_subcommand("verify", "check a bound report");
  verify->add_option("--theorem", options.theorem, "which bound: 1, 2, 3, or 4")
      ->required()
      ->check(CLI::Range(1, 4));
  verify->add_option("--A", options.a_path, "set file")->required();
  verify->add_option("--B", options.b_path, "set file")->required();
  verify->add_option("--A2", options.a2_path, "second left set (--theorem 3)");
  verify->add_option("--B2", options.b2_path, "second right set (--theorem 3)");
  verify->add_option("--C", options.c_path, "third set (--theorem 4)");
  verify->add_option("--map", options.map_spec, "point map (--theorem 4): power:P or poly:c0,c1,...");

  CLI::App* search = app.add_subcommand("search", "minimize |A+A| over convex sets");
  search->add_option("--mode", options.mode, "exhaustive or anneal")
      ->check(CLI::IsMember({"exhaustive", "anneal"}));
  search->add_option("--n", options.n, "set size")->required();
  search->add_option("--budget", options.budget, "total width budget (exhaustive)");
  search->add_option("--steps", options.steps, "annealing steps");
  search->add_option("--seed", options.seed, "annealing seed");
  search->add_option("--store", options.store_path, "append the record to this store");

  CLI::App* records = app.add_subcommand("records", "query the record store");
  records->add_option("--best", options.best_n, "best record for this n")->required();
  records->add_option("--path", options.records_path, "record store file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(options);
    if (sum->parsed()) return run_sumset(options);
    if (pairs->parsed()) return run_pairs(options);
    if (census->parsed()) return run_census(options);
    if (sigma->parsed()) return run_sigma(options);
    if (construct->parsed()) return run_construct(options);
    if (verify->parsed()) return run_verify(options);
    if (search->parsed()) return run_search(options);
    if (records->parsed()) return run_records(options);
  } catch (const sumsets::HypothesisError& e) {
    std::cerr << "hypothesis failed: " << e.what() << "\n";
    return 1;
  } catch (const sumsets::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
