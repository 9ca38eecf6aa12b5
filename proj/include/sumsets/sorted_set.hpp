#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sumsets/rational.hpp"

namespace sumsets {

// Strictly increasing finite sequence of exact rationals.
class SortedSet {
 public:
  SortedSet() = default;

  // Sorts the input; repeated values throw DuplicateElement (silent dedup
  // would corrupt every cardinality-based bound downstream).
  static SortedSet from_values(std::vector<Rational> values);

  // For callers that construct elements already in order. Still validates
  // strict increase, so no code path can produce a malformed set.
  static SortedSet from_sorted(std::vector<Rational> values);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }
  const Rational& front() const { return elements_.front(); }
  const Rational& back() const { return elements_.back(); }
  const std::vector<Rational>& elements() const { return elements_; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Rational& value) const;
  std::optional<std::size_t> index_of(const Rational& value) const;

  friend bool operator==(const SortedSet&, const SortedSet&) = default;

 private:
  std::vector<Rational> elements_;
};

// Consecutive gaps of a SortedSet; every entry is positive.
struct DiffSeq {
  std::vector<Rational> diffs;

  std::size_t size() const { return diffs.size(); }
  const Rational& operator[](std::size_t i) const { return diffs[i]; }
};

SortedSet make_set(std::vector<Rational> values);

// Gaps a_{i+1} - a_i; needs at least two elements.
DiffSeq consecutive_differences(const SortedSet& a);

// Gaps strictly increase. Vacuously true for fewer than three elements.
bool is_convex(const SortedSet& a);

// All gaps pairwise distinct. True for fewer than three elements.
bool has_distinct_consecutive_differences(const SortedSet& a);

// |{distinct gap values}| / |A|: the largest delta for which the gap set
// is at least delta * |A|.
Rational delta_ratio(const SortedSet& a);

// All pairwise differences distinct.
bool is_sidon(const SortedSet& s);

}  // namespace sumsets
