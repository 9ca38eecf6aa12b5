#include "sumsets/sumset.hpp"

#include <algorithm>

#include "sumsets/errors.hpp"

namespace sumsets {

namespace {

void require_distinct_gaps(const SortedSet& a) {
  if (!has_distinct_consecutive_differences(a)) {
    throw HypothesisError("set does not have distinct consecutive differences");
  }
}

// Blocks are the contiguous ranges of partition_block_sizes, so the block
// of an index is pure arithmetic: the first r blocks have q+1 elements.
struct BlockLocator {
  std::size_t q;
  std::size_t r;

  std::size_t block_of(std::size_t index) const {
    const std::size_t fat = r * (q + 1);
    if (index < fat) return index / (q + 1);
    return r + (index - fat) / q;
  }
};

unsigned long long choose2(std::size_t n) {
  return static_cast<unsigned long long>(n) * (n - 1) / 2;
}

}  // namespace

SortedSet sumset(const SortedSet& a, const SortedSet& b) {
  std::vector<Rational> sums;
  sums.reserve(a.size() * b.size());
  for (const Rational& x : a) {
    for (const Rational& y : b) {
      sums.push_back(x + y);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return SortedSet::from_sorted(std::move(sums));
}

std::vector<PairWitness> enumerate_pairs(const SortedSet& a, const SortedSet& b) {
  require_distinct_gaps(a);
  std::vector<PairWitness> pairs;
  if (a.size() < 2) return pairs;
  pairs.reserve((a.size() - 1) * b.size());
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      pairs.push_back(PairWitness{i, j + 1, a[i - 1] + b[j], a[i] + b[j]});
    }
  }
  return pairs;
}

PairDecoder::PairDecoder(const SortedSet& a, const SortedSet& b) : a_(a), b_(b) {
  require_distinct_gaps(a);
  if (a.size() < 2) return;
  gap_index_.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    gap_index_.emplace_back(a[i] - a[i - 1], i);
  }
  std::sort(gap_index_.begin(), gap_index_.end());
}

std::optional<PairDecode> PairDecoder::decode(const Rational& low,
                                              const Rational& high) const {
  if (!(low < high)) return std::nullopt;
  const Rational gap = high - low;
  const auto it = std::lower_bound(
      gap_index_.begin(), gap_index_.end(), gap,
      [](const std::pair<Rational, std::size_t>& entry, const Rational& value) {
        return entry.first < value;
      });
  if (it == gap_index_.end() || it->first != gap) return std::nullopt;
  const std::size_t i = it->second;  // 1-based gap index, unique by hypothesis
  const auto j = b_.index_of(low - a_[i - 1]);
  if (!j) return std::nullopt;
  return PairDecode{i, *j + 1};
}

std::optional<PairDecode> decode_pair(const SortedSet& a, const Rational& low,
                                      const Rational& high, const SortedSet& b) {
  return PairDecoder(a, b).decode(low, high);
}

void enumerate_quadruples(const SortedSet& a, const SortedSet& a_prime,
                          const SigmaMap& sigma, const SortedSet& b,
                          const SortedSet& b_prime,
                          const std::function<bool(const QuadWitness&)>& visit) {
  if (!verify_sigma(a, a_prime, sigma)) {
    throw HypothesisError("sigma does not separate the gap pairs");
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    const std::size_t s = sigma.image[i - 1];
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t jp = 0; jp < b_prime.size(); ++jp) {
        QuadWitness witness{
            i,
            j + 1,
            jp + 1,
            {a[i - 1] + b[j], a[i] + b[j], a_prime[s - 1] + b_prime[jp],
             a_prime[s] + b_prime[jp]}};
        if (!visit(witness)) return;
      }
    }
  }
}

Int quadruple_count(const SortedSet& a, const SortedSet& a_prime, const SigmaMap& sigma,
                    const SortedSet& b, const SortedSet& b_prime) {
  std::vector<std::array<Rational, 4>> seen;
  enumerate_quadruples(a, a_prime, sigma, b, b_prime,
                       [&seen](const QuadWitness& witness) {
                         seen.push_back(witness.values);
                         return true;
                       });
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return Int(seen.size());
}

std::vector<std::size_t> partition_block_sizes(std::size_t m, std::size_t t) {
  if (t == 0 || t > m) {
    throw InvalidBlockCount("cannot split " + std::to_string(m) + " elements into " +
                            std::to_string(t) + " blocks");
  }
  const std::size_t q = m / t;
  const std::size_t r = m % t;
  std::vector<std::size_t> sizes(t, q);
  for (std::size_t u = 0; u < r; ++u) sizes[u] = q + 1;
  return sizes;
}

std::vector<std::pair<std::size_t, std::size_t>> partition_blocks(const SortedSet& c,
                                                                  std::size_t t) {
  const std::vector<std::size_t> sizes = partition_block_sizes(c.size(), t);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  ranges.reserve(t);
  std::size_t begin = 0;
  for (const std::size_t size : sizes) {
    ranges.emplace_back(begin, begin + size);
    begin += size;
  }
  return ranges;
}

BlockCensus block_pair_census(const SortedSet& a, const SortedSet& b, std::size_t t,
                              CensusMethod method) {
  require_distinct_gaps(a);
  const SortedSet total = sumset(a, b);
  const std::size_t m = total.size();
  BlockCensus census;
  census.t = t;
  census.block_sizes = partition_block_sizes(m, t);
  census.lower_bound = static_cast<long long>(b.size()) *
                       (static_cast<long long>(a.size()) - static_cast<long long>(t));
  for (const std::size_t size : census.block_sizes) {
    census.upper_bound += choose2(size);
  }
  if (method == CensusMethod::Auto) {
    method = census.upper_bound <= 4096 ? CensusMethod::DecodeSubsets
                                        : CensusMethod::RunLength;
  }

  const BlockLocator locator{m / t, m % t};
  if (method == CensusMethod::RunLength) {
    // Walk each translate A + b_j; its consecutive elements are exactly the
    // pair subsets, so count the steps that stay inside one block.
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t previous_block = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto pos = total.index_of(a[i] + b[j]);
        if (!pos) throw Error("sumset misses one of its own translates");
        const std::size_t block = locator.block_of(*pos);
        if (i > 0 && block == previous_block) ++census.within_block_pairs;
        previous_block = block;
      }
    }
  } else {
    // Decode every same-block two-element subset; the decodable ones are
    // exactly the pair subsets that landed in that block.
    const PairDecoder decoder(a, b);
    const auto ranges = partition_blocks(total, t);
    for (const auto& [begin, end] : ranges) {
      for (std::size_t x = begin; x < end; ++x) {
        for (std::size_t y = x + 1; y < end; ++y) {
          if (decoder.decode(total[x], total[y])) ++census.within_block_pairs;
        }
      }
    }
  }
  return census;
}

}  // namespace sumsets
