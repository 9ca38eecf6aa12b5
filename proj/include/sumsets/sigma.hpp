#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sumsets/point_map.hpp"
#include "sumsets/sorted_set.hpp"

namespace sumsets {

// Bijection on gap indices {1..k-1}, stored 1-based: image[i-1] = sigma(i).
struct SigmaMap {
  std::vector<std::size_t> image;

  std::size_t size() const { return image.size(); }
  static SigmaMap identity(std::size_t count);

  friend bool operator==(const SigmaMap&, const SigmaMap&) = default;
};

// A bijection making the ordered gap pairs (d_i, d'_sigma(i)) pairwise
// distinct, or nothing when no such bijection exists.
//
// Feasibility is decided on gap-value classes, not raw indices: a valid
// sigma is exactly a 0/1 matrix with row sums the d-class sizes and column
// sums the d'-class sizes, which a unit-capacity max-flow decides. The
// witness is recovered from an integral flow; classes are ordered by value
// and indices assigned ascending, so identical inputs give identical sigma.
std::optional<SigmaMap> find_sigma(const SortedSet& a, const SortedSet& a_prime);
std::optional<SigmaMap> find_sigma_for_diffs(const DiffSeq& d, const DiffSeq& d_prime);

// True iff the gap pairs (d_i, d'_sigma(i)) are pairwise distinct.
// A sigma that is not a permutation of {1..k-1} throws InvalidSigma.
bool verify_sigma(const SortedSet& a, const SortedSet& a_prime, const SigmaMap& sigma);
bool verify_sigma_for_diffs(const DiffSeq& d, const DiffSeq& d_prime, const SigmaMap& sigma);

// Verifies that the identity map works for the pair (A, F(A)) and returns
// it; throws HypothesisError when it does not (affine F, degenerate image).
SigmaMap identity_sigma_for_convex_map(const SortedSet& a, const PointMap& f);

}  // namespace sumsets
