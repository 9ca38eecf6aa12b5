#pragma once

// Seeded instance generators. Raw modulo on mt19937_64 keeps every sequence
// identical across standard libraries; the bias is irrelevant here.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sumsets/sorted_set.hpp"

namespace gen {

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Integer set with pairwise distinct gaps: k-1 distinct gap values in
// random order on top of a random start. Entries stay below 10^6.
inline sumsets::SortedSet distinct_gap_set(std::mt19937_64& rng, std::size_t k,
                                           long long max_gap = 20000) {
  std::set<long long> seen;
  std::vector<long long> gaps;
  while (gaps.size() + 1 < k) {
    const long long g = pick(rng, 1, max_gap);
    if (seen.insert(g).second) gaps.push_back(g);
  }
  std::vector<sumsets::Rational> points;
  points.reserve(k);
  long long value = pick(rng, 0, 1000);
  points.emplace_back(value);
  for (const long long g : gaps) {
    value += g;
    points.emplace_back(value);
  }
  return sumsets::SortedSet::from_sorted(std::move(points));
}

// Arbitrary integer set with entries in [0, 10^6].
inline sumsets::SortedSet integer_set(std::mt19937_64& rng, std::size_t l) {
  std::set<long long> values;
  while (values.size() < l) values.insert(pick(rng, 0, 1000000));
  std::vector<sumsets::Rational> points(values.begin(), values.end());
  return sumsets::SortedSet::from_sorted(std::move(points));
}

// Convex positive set (strictly increasing gaps), suitable for power maps.
inline sumsets::SortedSet convex_set(std::mt19937_64& rng, std::size_t n) {
  std::vector<sumsets::Rational> points;
  points.reserve(n);
  long long value = pick(rng, 1, 50);
  long long gap = pick(rng, 1, 10);
  points.emplace_back(value);
  for (std::size_t i = 1; i < n; ++i) {
    value += gap;
    points.emplace_back(value);
    gap += pick(rng, 1, 5);
  }
  return sumsets::SortedSet::from_sorted(std::move(points));
}

}  // namespace gen
