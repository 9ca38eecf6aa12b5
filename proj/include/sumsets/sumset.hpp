#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sumsets/rational.hpp"
#include "sumsets/sigma.hpp"
#include "sumsets/sorted_set.hpp"

namespace sumsets {

// The two-element subset {a_i + b_j, a_{i+1} + b_j} of A+B, with the
// 1-based indices that produced it.
struct PairWitness {
  std::size_t i;  // gap index, 1..k-1
  std::size_t j;  // index into B, 1..l
  Rational low;
  Rational high;
};

struct PairDecode {
  std::size_t i;
  std::size_t j;

  friend bool operator==(const PairDecode&, const PairDecode&) = default;
};

struct QuadWitness {
  std::size_t i;
  std::size_t j;
  std::size_t j_prime;
  std::array<Rational, 4> values;
};

struct BlockCensus {
  std::size_t t = 0;
  std::vector<std::size_t> block_sizes;
  unsigned long long within_block_pairs = 0;
  long long lower_bound = 0;            // l*(k-t); negative once t exceeds k
  unsigned long long upper_bound = 0;   // sum of C(|C_u|, 2)
};

enum class CensusMethod { Auto, RunLength, DecodeSubsets };

// Sorted deduplicated {a+b : a in A, b in B}.
SortedSet sumset(const SortedSet& a, const SortedSet& b);

// All (k-1)*l pair witnesses, ordered by (i, j). Requires A to have
// distinct consecutive differences; otherwise HypothesisError.
std::vector<PairWitness> enumerate_pairs(const SortedSet& a, const SortedSet& b);

// Recovers the unique (i, j) with high - low = d_i and low - a_i in B, or
// nothing. Absence is a valid answer, never an error.
std::optional<PairDecode> decode_pair(const SortedSet& a, const Rational& low,
                                      const Rational& high, const SortedSet& b);

// Decodes many pairs against one (A, B); builds the gap index once.
class PairDecoder {
 public:
  PairDecoder(const SortedSet& a, const SortedSet& b);
  std::optional<PairDecode> decode(const Rational& low, const Rational& high) const;

 private:
  const SortedSet& a_;
  const SortedSet& b_;
  std::vector<std::pair<Rational, std::size_t>> gap_index_;  // sorted by gap value
};

// Number of distinct quadruples (a_i+b_j, a_{i+1}+b_j, a'_{s(i)}+b'_{j'},
// a'_{s(i)+1}+b'_{j'}); equals (k-1)*l*l' once sigma is valid.
Int quadruple_count(const SortedSet& a, const SortedSet& a_prime, const SigmaMap& sigma,
                    const SortedSet& b, const SortedSet& b_prime);

// Streams witnesses without materializing them; the visitor returns false
// to stop early. Throws HypothesisError on an invalid sigma.
void enumerate_quadruples(const SortedSet& a, const SortedSet& a_prime, const SigmaMap& sigma,
                          const SortedSet& b, const SortedSet& b_prime,
                          const std::function<bool(const QuadWitness&)>& visit);

// Writing m = q*t + r, the first r blocks get q+1 elements, the rest q.
std::vector<std::size_t> partition_block_sizes(std::size_t m, std::size_t t);

// Same partition as [begin, end) index ranges into the sorted set.
std::vector<std::pair<std::size_t, std::size_t>> partition_blocks(const SortedSet& c,
                                                                  std::size_t t);

// Counts the pair subsets that land inside a single block of the interval
// partition of A+B into t blocks. RunLength walks each translate through
// the blocks in O(k*l*log m); DecodeSubsets decodes every same-block
// two-element subset and is the oracle the fast path is checked against.
BlockCensus block_pair_census(const SortedSet& a, const SortedSet& b, std::size_t t,
                              CensusMethod method = CensusMethod::Auto);

}  // namespace sumsets
