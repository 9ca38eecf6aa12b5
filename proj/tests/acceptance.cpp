// Acceptance suite: one line per criterion, PASS or FAIL, nothing else on
// stdout. The CLI binary under test is argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "sumsets/bounds.hpp"
#include "sumsets/json_io.hpp"
#include "sumsets/ruzsa.hpp"
#include "sumsets/search.hpp"
#include "sumsets/sigma.hpp"
#include "sumsets/sumset.hpp"

namespace {

using namespace sumsets;
using Clock = std::chrono::steady_clock;

std::string g_cli;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  out << s << "s";
  return out.str();
}

struct Instance {
  SortedSet a;
  SortedSet b;
};

// The shared corpus for criteria 1-3: A with distinct consecutive
// differences, 2 <= k <= 50; arbitrary B, 1 <= l <= 50; entries <= 10^6.
std::vector<Instance> shared_instances() {
  std::mt19937_64 rng(1);
  std::vector<Instance> out;
  out.reserve(500);
  for (int i = 0; i < 500; ++i) {
    const auto k = static_cast<std::size_t>(gen::pick(rng, 2, 50));
    const auto l = static_cast<std::size_t>(gen::pick(rng, 1, 50));
    out.push_back({gen::distinct_gap_set(rng, k), gen::integer_set(rng, l)});
  }
  return out;
}

std::optional<std::string> criterion1(const std::vector<Instance>& instances,
                                      std::string* timing) {
  const auto start = Clock::now();
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const SortedSet& a = instances[idx].a;
    const SortedSet& b = instances[idx].b;
    const auto pairs = enumerate_pairs(a, b);
    const std::size_t expected = (a.size() - 1) * b.size();
    if (pairs.size() != expected) {
      return "instance " + std::to_string(idx) + ": " + std::to_string(pairs.size()) +
             " pairs, expected " + std::to_string(expected);
    }
    std::set<std::pair<Rational, Rational>> distinct;
    const PairDecoder decoder(a, b);
    for (const PairWitness& w : pairs) {
      if (!distinct.emplace(w.low, w.high).second) {
        return "instance " + std::to_string(idx) + ": repeated pair subset";
      }
      const auto back = decoder.decode(w.low, w.high);
      if (!back || back->i != w.i || back->j != w.j) {
        return "instance " + std::to_string(idx) + ": decode failed to round-trip";
      }
    }
  }
  const double elapsed = seconds_since(start);
  *timing = fmt_seconds(elapsed);
  if (elapsed >= 10.0) return "took " + fmt_seconds(elapsed) + ", limit 10s";
  return std::nullopt;
}

std::optional<std::string> criterion2(const std::vector<Instance>& instances) {
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const BoundReport report = check_theorem1(instances[idx].a, instances[idx].b);
    if (!report.hypothesis_ok) {
      return "instance " + std::to_string(idx) + ": hypothesis unexpectedly failed";
    }
    if (!report.all_checks_pass()) {
      return "instance " + std::to_string(idx) + ": a bound check failed";
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion3(const std::vector<Instance>& instances) {
  std::size_t cross_checked = 0;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const SortedSet& a = instances[idx].a;
    const SortedSet& b = instances[idx].b;
    const std::size_t k = a.size();
    const std::size_t m = sumset(a, b).size();
    std::set<std::size_t> block_counts = {1, k / 2, k - 1};
    block_counts.erase(0);
    for (const std::size_t t : block_counts) {
      const BlockCensus fast = block_pair_census(a, b, t, CensusMethod::RunLength);
      if (static_cast<long long>(fast.within_block_pairs) < fast.lower_bound ||
          fast.within_block_pairs > fast.upper_bound) {
        return "instance " + std::to_string(idx) + ", t=" + std::to_string(t) +
               ": census outside its bounds";
      }
      if (m <= 200) {
        const BlockCensus brute = block_pair_census(a, b, t, CensusMethod::DecodeSubsets);
        if (fast.within_block_pairs != brute.within_block_pairs) {
          return "instance " + std::to_string(idx) + ", t=" + std::to_string(t) +
                 ": run-length census disagrees with subset decoding";
        }
        ++cross_checked;
      }
    }
  }
  if (cross_checked == 0) return "no instance had m <= 200; cross-check never ran";
  return std::nullopt;
}

std::optional<std::string> criterion4(std::string* timing) {
  const auto start = Clock::now();
  for (std::size_t len = 1; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t code_d = 0; code_d < total; ++code_d) {
      DiffSeq d;
      std::vector<int> raw_d;
      std::size_t rest = code_d;
      for (std::size_t i = 0; i < len; ++i) {
        const int digit = 1 + static_cast<int>(rest % 3);
        d.diffs.emplace_back(digit);
        raw_d.push_back(digit);
        rest /= 3;
      }
      for (std::size_t code_p = 0; code_p < total; ++code_p) {
        DiffSeq dp;
        std::vector<int> raw_p;
        rest = code_p;
        for (std::size_t i = 0; i < len; ++i) {
          const int digit = 1 + static_cast<int>(rest % 3);
          dp.diffs.emplace_back(digit);
          raw_p.push_back(digit);
          rest /= 3;
        }
        const auto sigma = find_sigma_for_diffs(d, dp);
        if (sigma.has_value() != oracles::sigma_exists(raw_d, raw_p)) {
          return "length " + std::to_string(len) + ", codes (" + std::to_string(code_d) +
                 ", " + std::to_string(code_p) + "): matcher disagrees with brute force";
        }
        if (sigma && !verify_sigma_for_diffs(d, dp, *sigma)) {
          return "length " + std::to_string(len) + ", codes (" + std::to_string(code_d) +
                 ", " + std::to_string(code_p) + "): returned sigma fails verification";
        }
      }
    }
  }
  *timing = fmt_seconds(seconds_since(start));
  return std::nullopt;
}

std::optional<std::string> criterion5() {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto k = static_cast<std::size_t>(gen::pick(rng, 2, 40));
    const SortedSet a = gen::distinct_gap_set(rng, k);
    const SortedSet a2 = gen::distinct_gap_set(rng, k);
    const SortedSet b = gen::integer_set(rng, static_cast<std::size_t>(gen::pick(rng, 1, 40)));
    const SortedSet b2 = gen::integer_set(rng, static_cast<std::size_t>(gen::pick(rng, 1, 40)));
    const BoundReport report = check_theorem3(a, a2, b, b2);
    if (!report.hypothesis_ok) {
      return "pair instance " + std::to_string(round) + ": sigma unexpectedly infeasible";
    }
    if (!report.all_checks_pass()) {
      return "pair instance " + std::to_string(round) + ": product bound failed";
    }
  }

  const PointMap sq = PointMap::power(2);
  for (int round = 0; round < 50; ++round) {
    const auto n = static_cast<std::size_t>(gen::pick(rng, 1, 40));
    const SortedSet a = gen::integer_set(rng, n);
    const SortedSet image = apply_map(a, sq);
    const BoundReport report = check_theorem4(a, image, a, sq);
    if (!report.hypothesis_ok) {
      return "square instance " + std::to_string(round) + ": hypothesis failed";
    }
    if (!report.all_checks_pass()) {
      return "square instance " + std::to_string(round) + ": max-power bound failed";
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion6(std::string* timing) {
  const auto start = Clock::now();
  const std::vector<std::pair<std::size_t, std::size_t>> cases = {
      {5, 10}, {7, 21}, {9, 36}, {11, 55}, {13, 78}};
  for (const auto& [terms, expected_k] : cases) {
    const RuzsaArtifacts art = build_ruzsa_set(greedy_sidon(terms));
    if (art.k != expected_k) {
      return "|S|=" + std::to_string(terms) + ": k=" + std::to_string(art.k) +
             ", expected " + std::to_string(expected_k);
    }
    if (!has_distinct_consecutive_differences(art.constructed)) {
      return "|S|=" + std::to_string(terms) + ": constructed set repeats a gap";
    }
    if (!tightness_report(art).all_checks_pass()) {
      return "|S|=" + std::to_string(terms) + ": sandwich inequality failed";
    }
  }
  const double elapsed = seconds_since(start);
  *timing = fmt_seconds(elapsed);
  if (elapsed >= 30.0) return "took " + fmt_seconds(elapsed) + ", limit 30s";
  return std::nullopt;
}

std::optional<std::string> criterion7() {
  const SearchRecord two = exhaustive_min_sumset(2, 60);
  if (two.best_size != 3) return "n=2: best " + std::to_string(two.best_size) + ", expected 3";
  const SearchRecord three = exhaustive_min_sumset(3, 20);
  if (three.best_size != 6) {
    return "n=3: best " + std::to_string(three.best_size) + ", expected 6";
  }
  for (int n = 4; n <= 8; ++n) {
    const SearchRecord record = exhaustive_min_sumset(n, 60);
    const auto [oracle_best, oracle_witness] = oracles::min_self_sumset(n, 60);
    if (record.best_size != oracle_best) {
      return "n=" + std::to_string(n) + ": search " + std::to_string(record.best_size) +
             ", oracle " + std::to_string(oracle_best);
    }
    if (record.witness_diffs != oracle_witness) {
      return "n=" + std::to_string(n) + ": witness differs from the oracle's";
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const long long floor = exhaustive_min_sumset(n, 60).best_size;
    const SearchRecord annealed = anneal_min_sumset(n, 1200, 2026);
    if (annealed.best_size < floor) {
      return "n=" + std::to_string(n) + ": annealing reported " +
             std::to_string(annealed.best_size) + ", below the exhaustive " +
             std::to_string(floor);
    }
  }
  return std::nullopt;
}

struct CliOutcome {
  int code;
  std::string out;
};

std::optional<CliOutcome> run_cli(const std::string& args) {
  const std::string command = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return std::nullopt;
  std::string out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  const int status = ::pclose(pipe);
  if (!WIFEXITED(status)) return std::nullopt;
  return CliOutcome{WEXITSTATUS(status), out};
}

std::optional<std::string> criterion8() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("sumsets-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  struct Cleanup {
    fs::path dir;
    ~Cleanup() { std::filesystem::remove_all(dir); }
  } cleanup{dir};

  auto set_file = [&](const std::string& name, const std::vector<std::string>& values) {
    Json json = Json::array();
    for (const std::string& v : values) json.push_back(v);
    const fs::path path = dir / name;
    std::ofstream out(path);
    out << json.dump() << "\n";
    return path.string();
  };

  const std::string a = set_file("a.json", {"0", "1", "3"});
  const std::string b = set_file("b.json", {"0", "5", "11"});
  const std::string a2 = set_file("a2.json", {"0", "1", "4"});
  const std::string pair = set_file("pair.json", {"0", "1"});
  const std::string base = set_file("base.json", {"1", "2", "3"});
  const std::string squares = set_file("squares.json", {"1", "4", "9"});
  const std::string store = (dir / "store.jsonl").string();

  // Freeze a store first so the records queries read stable bytes.
  const auto seeded =
      run_cli("search --mode exhaustive --n 4 --budget 60 --store " + store);
  if (!seeded || seeded->code != 0) return "could not seed the record store";

  const std::vector<std::string> invocations = {
      "check --A " + a,
      "sumset --A " + a + " --B " + b,
      "pairs --A " + a + " --B " + b,
      "pairs --A " + a + " --B " + b + " --decode 5 6",
      "census --A " + a + " --B " + b + " --t 1",
      "census --A " + a + " --B " + b + " --t 3 --method decode",
      "sigma --A " + a + " --A2 " + a2,
      "construct --sidon greedy --size 5",
      "construct --sidon greedy --size 13",
      "construct --sidon modular --prime 7",
      "verify --theorem 1 --A " + a + " --B " + b,
      "verify --theorem 2 --A " + set_file("t2.json", {"0", "1", "2", "4", "8"}) +
          " --B " + pair,
      "verify --theorem 3 --A " + a + " --A2 " + a2 + " --B " + pair + " --B2 " + pair,
      "verify --theorem 4 --A " + base + " --B " + squares + " --C " + base +
          " --map power:2",
      "search --mode exhaustive --n 6 --budget 60",
      "search --mode anneal --n 6 --steps 1000 --seed 7",
      "records --best 4 --path " + store,
  };
  for (const std::string& args : invocations) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    if (!first || !second) return "could not run: " + args;
    if (first->out.empty()) return "empty stdout: " + args;
    if (first->code != second->code || first->out != second->out) {
      return "outputs differ between runs: " + args;
    }
  }
  return std::nullopt;
}

bool report(int number, const std::string& label, std::optional<std::string> failure,
            const std::string& timing = "") {
  if (failure) {
    std::cout << "FAIL criterion " << number << ": " << label << ": " << *failure << "\n";
    return false;
  }
  std::cout << "PASS criterion " << number << ": " << label
            << (timing.empty() ? "" : " (" + timing + ")") << "\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_suite <path to sumsets CLI>\n";
    return 2;
  }
  g_cli = argv[1];

  const std::vector<Instance> instances = shared_instances();
  int failed = 0;
  std::string timing;

  timing.clear();
  if (!report(1, "pair counts and decode round-trips on 500 seeded instances",
              criterion1(instances, &timing), timing)) {
    ++failed;
  }
  if (!report(2, "first bound holds exactly on all 500 instances", criterion2(instances))) {
    ++failed;
  }
  if (!report(3, "census stays within bounds and matches subset decoding",
              criterion3(instances))) {
    ++failed;
  }
  timing.clear();
  if (!report(4, "matcher agrees with brute force on the full small grid",
              criterion4(&timing), timing)) {
    ++failed;
  }
  if (!report(5, "pair and squared-map bounds hold on seeded instances", criterion5())) {
    ++failed;
  }
  timing.clear();
  if (!report(6, "construction sandwich holds for all five Sidon sizes",
              criterion6(&timing), timing)) {
    ++failed;
  }
  if (!report(7, "exhaustive minima match the naive oracle; annealing never dips below",
              criterion7())) {
    ++failed;
  }
  if (!report(8, "repeated CLI invocations emit byte-identical output", criterion8())) {
    ++failed;
  }

  return failed == 0 ? 0 : 1;
}
