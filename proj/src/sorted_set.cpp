#include "sumsets/sorted_set.hpp"

#include <algorithm>

#include "sumsets/errors.hpp"

namespace sumsets {

SortedSet SortedSet::from_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1]) {
      throw DuplicateElement("duplicate element " + format_rational(values[i]));
    }
  }
  SortedSet set;
  set.elements_ = std::move(values);
  return set;
}

SortedSet SortedSet::from_sorted(std::vector<Rational> values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i - 1] < values[i])) {
      throw DuplicateElement("elements not strictly increasing at position " +
                             std::to_string(i));
    }
  }
  SortedSet set;
  set.elements_ = std::move(values);
  return set;
}

bool SortedSet::contains(const Rational& value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::optional<std::size_t> SortedSet::index_of(const Rational& value) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  if (it == elements_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

SortedSet make_set(std::vector<Rational> values) {
  return SortedSet::from_values(std::move(values));
}

DiffSeq consecutive_differences(const SortedSet& set) {
  if (set.size() < 2) {
    throw TooSmall("need at least 2 elements for differences, got " +
                   std::to_string(set.size()));
  }
  DiffSeq seq;
  seq.diffs.reserve(set.size() - 1);
  for (std::size_t i = 1; i < set.size(); ++i) {
    seq.diffs.push_back(set[i] - set[i - 1]);
  }
  return seq;
}

bool is_convex(const SortedSet& set) {
  if (set.size() <= 2) return true;
  for (std::size_t i = 2; i < set.size(); ++i) {
    if (!(set[i] - set[i - 1] > set[i - 1] - set[i - 2])) return false;
  }
  return true;
}

bool has_distinct_consecutive_differences(const SortedSet& set) {
  if (set.size() <= 2) return true;
  const DiffSeq seq = consecutive_differences(set);
  std::vector<Rational> diffs = seq.diffs;
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

Rational delta_ratio(const SortedSet& set) {
  if (set.size() < 2) {
    throw TooSmall("delta ratio needs at least 2 elements, got " +
                   std::to_string(set.size()));
  }
  const DiffSeq seq = consecutive_differences(set);
  std::vector<Rational> diffs = seq.diffs;
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  return Rational(Int(diffs.size()), Int(set.size()));
}

bool is_sidon(const SortedSet& set) {
  // Pairwise differences of distinct elements must all be distinct;
  // equivalently all pairwise sums a_i + a_j (i <= j) are distinct.
  std::vector<Rational> sums;
  sums.reserve(set.size() * (set.size() + 1) / 2);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      sums.push_back(set[i] + set[j]);
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace sumsets
