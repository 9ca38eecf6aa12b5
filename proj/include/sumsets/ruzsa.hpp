#pragma once

#include <cstddef>
#include <vector>

#include "sumsets/bounds.hpp"
#include "sumsets/rational.hpp"
#include "sumsets/sorted_set.hpp"

namespace sumsets {

// Vertex sequence of an Eulerian circuit through the complete graph on a
// Sidon set, with the closing vertex dropped: C(|S|,2) entries whose
// consecutive differences are pairwise distinct and nonzero.
struct Listing {
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
};

struct RuzsaArtifacts {
  SortedSet sidon;         // S as given
  SortedSet sidon_scaled;  // translated to 0, scaled into [0, 1)
  Listing listing;         // over sidon_scaled
  SortedSet constructed;   // A = {i + L_i : 1 <= i <= k}
  std::size_t k = 0;       // C(|S|, 2)
  std::size_t sumset_size = 0;  // |A + [k]| with [k] = {1..k}
};

struct TightnessReport {
  std::size_t k = 0;
  std::size_t sumset_size = 0;
  std::vector<BoundCheck> checks;

  bool all_checks_pass() const;
};

// First n terms of the greedy Sidon sequence starting at 1: repeatedly
// append the least positive integer keeping all pairwise differences
// distinct.
SortedSet greedy_sidon(std::size_t n);

// {2pk + (k^2 mod p) : 0 <= k < p}, a dense Sidon set of size p.
SortedSet modular_sidon(unsigned long long p);

// Hierholzer circuit over the complete graph on S, ascending-neighbor
// order, started at min(S). Needs S Sidon with odd size >= 3 (all degrees
// even). Distinct edges of a Sidon set have distinct signed differences,
// which is what makes the listing differences distinct.
Listing eulerian_listing(const SortedSet& s);

// Scale S into [0, 1) (translate min to 0, divide by max+1), list it, and
// assemble A = {i + L_i}. Every step of A is 1 + delta with |delta| < 1,
// so A is strictly increasing with distinct consecutive differences.
RuzsaArtifacts build_ruzsa_set(const SortedSet& s);

// Exact two-sided sandwich: |A+[k]|^2 <= 9k^3 against the construction's
// envelope, and 9|A+[k]|^2 >= k^3 as the guaranteed floor.
TightnessReport tightness_report(const RuzsaArtifacts& artifacts);

}  // namespace sumsets
