#include "sumsets/ruzsa.hpp"

#include <algorithm>
#include <set>

#include "sumsets/errors.hpp"
#include "sumsets/sumset.hpp"

namespace sumsets {

namespace {

bool is_prime(unsigned long long p) {
  if (p < 2) return false;
  for (unsigned long long i = 2; i <= p / i; ++i) {
    if (p % i == 0) return false;
  }
  return true;
}

BoundCheck make_check(std::string name, Int lhs, Int rhs, std::string op) {
  const bool pass = op == "<=" ? lhs <= rhs : lhs >= rhs;
  return BoundCheck{std::move(name), std::move(lhs), std::move(rhs), std::move(op), pass};
}

}  // namespace

bool TightnessReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& check) { return check.pass; });
}

SortedSet greedy_sidon(std::size_t n) {
  if (n < 1) throw TooSmall("needs n >= 1");
  std::vector<long long> terms{1};
  std::set<long long> used;  // every pairwise difference so far
  while (terms.size() < n) {
    long long candidate = terms.back() + 1;
    for (;;) {
      // New differences candidate - t are pairwise distinct automatically,
      // so only collisions with existing differences can disqualify.
      const bool ok = std::none_of(terms.begin(), terms.end(),
                                   [&](long long t) { return used.count(candidate - t); });
      if (ok) break;
      ++candidate;
    }
    for (const long long t : terms) used.insert(candidate - t);
    terms.push_back(candidate);
  }
  std::vector<Rational> values(terms.begin(), terms.end());
  return SortedSet::from_sorted(std::move(values));
}

SortedSet modular_sidon(unsigned long long p) {
  if (!is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not prime");
  }
  std::vector<Rational> values;
  values.reserve(p);
  const Int pi(p);
  for (unsigned long long k = 0; k < p; ++k) {
    const Int ki(k);
    values.emplace_back(Int(2 * pi * ki + (ki * ki) % pi));
  }
  const SortedSet set = SortedSet::from_values(std::move(values));
  if (!is_sidon(set)) throw Error("modular family lost the Sidon property");
  return set;
}

Listing eulerian_listing(const SortedSet& s) {
  const std::size_t n = s.size();
  if (n < 3) throw TooSmall("listing needs at least 3 elements");
  if (n % 2 == 0) throw NeedOddSize("|S| = " + std::to_string(n) + " is even");
  if (!is_sidon(s)) throw HypothesisError("not a Sidon set");

  // Iterative Hierholzer over the complete graph, neighbors scanned in
  // ascending order from a per-vertex pointer, start at the minimum.
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    while (next[v] < n && (next[v] == v || used[v][next[v]])) ++next[v];
    if (next[v] < n) {
      const std::size_t u = next[v];
      used[v][u] = used[u][v] = true;
      stack.push_back(u);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  const std::size_t k = n * (n - 1) / 2;
  if (circuit.size() != k + 1 || circuit.front() != 0 || circuit.back() != 0) {
    throw Error("complete graph of odd order lost its Eulerian circuit");
  }
  Listing listing;
  listing.entries.reserve(k);
  for (std::size_t i = 0; i < k; ++i) listing.entries.push_back(s[circuit[i]]);

  // Distinct edges of a Sidon set have distinct signed differences.
  std::vector<Rational> diffs;
  diffs.reserve(k - 1);
  for (std::size_t i = 1; i < k; ++i) {
    diffs.push_back(listing.entries[i] - listing.entries[i - 1]);
    if (diffs.back() == 0) throw Error("listing repeats a vertex consecutively");
  }
  std::sort(diffs.begin(), diffs.end());
  if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end()) {
    throw Error("listing differences collide");
  }
  return listing;
}

RuzsaArtifacts build_ruzsa_set(const SortedSet& s) {
  RuzsaArtifacts artifacts;
  artifacts.sidon = s;

  // Translate the minimum to 0, then scale by max+1: the listing then lives
  // in [0, 1), which keeps every step of A inside (0, 2).
  std::vector<Rational> scaled;
  scaled.reserve(s.size());
  if (s.empty()) throw TooSmall("listing needs at least 3 elements");
  const Rational offset = s.front();
  const Rational denominator = (s.back() - offset) + 1;
  for (const Rational& value : s) {
    scaled.push_back((value - offset) / denominator);
  }
  artifacts.sidon_scaled = SortedSet::from_sorted(std::move(scaled));

  artifacts.listing = eulerian_listing(artifacts.sidon_scaled);
  const std::size_t k = artifacts.listing.size();
  artifacts.k = k;

  std::vector<Rational> constructed;
  constructed.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    constructed.push_back(Rational(Int(i + 1)) + artifacts.listing.entries[i]);
  }
  artifacts.constructed = SortedSet::from_sorted(std::move(constructed));
  if (!has_distinct_consecutive_differences(artifacts.constructed)) {
    throw Error("constructed set repeats a gap");
  }

  std::vector<Rational> window;
  window.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) window.emplace_back(Int(i));
  artifacts.sumset_size = sumset(artifacts.constructed,
                                 SortedSet::from_sorted(std::move(window))).size();
  if (Int(artifacts.sumset_size) > Int(2 * k - 1) * Int(s.size())) {
    throw Error("sumset exceeds the (2k-1)|S| envelope");
  }
  return artifacts;
}

TightnessReport tightness_report(const RuzsaArtifacts& artifacts) {
  TightnessReport report;
  report.k = artifacts.k;
  report.sumset_size = artifacts.sumset_size;
  const Int m(artifacts.sumset_size);
  const Int k(artifacts.k);
  report.checks.push_back(make_check("envelope", m * m, 9 * k * k * k, "<="));
  report.checks.push_back(make_check("floor", 9 * m * m, k * k * k, ">="));
  return report;
}

}  // namespace sumsets
