#include <doctest.h>

#include <cstddef>
#include <random>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/point_map.hpp"
#include "sumsets/sigma.hpp"

using namespace sumsets;

namespace {

SortedSet ints(std::vector<long long> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const long long v : values) out.emplace_back(v);
  return make_set(std::move(out));
}

DiffSeq diffs(std::vector<long long> values) {
  DiffSeq d;
  for (const long long v : values) d.diffs.emplace_back(v);
  return d;
}

}  // namespace

TEST_CASE("find_sigma on worked examples") {
  // d = (1,2), d' = (1,3): identity already separates.
  const auto easy = find_sigma(ints({0, 1, 3}), ints({0, 1, 4}));
  REQUIRE(easy.has_value());
  CHECK(easy->image == std::vector<std::size_t>{1, 2});
  CHECK(verify_sigma(ints({0, 1, 3}), ints({0, 1, 4}), *easy));

  // d = (1,1,2), d' = (3,4,3): the repeated 1s need the repeated 3s split.
  const auto split = find_sigma_for_diffs(diffs({1, 1, 2}), diffs({3, 4, 3}));
  REQUIRE(split.has_value());
  CHECK(split->image == std::vector<std::size_t>{1, 2, 3});
  CHECK(verify_sigma_for_diffs(diffs({1, 1, 2}), diffs({3, 4, 3}), *split));

  // d = (1,1), d' = (3,3): both pairs would be (1,3).
  CHECK_FALSE(find_sigma_for_diffs(diffs({1, 1}), diffs({3, 3})).has_value());
}

TEST_CASE("verify_sigma rejects a bad assignment") {
  const SigmaMap bad{{1, 3, 2}};
  CHECK_FALSE(verify_sigma_for_diffs(diffs({1, 1, 2}), diffs({3, 4, 3}), bad));
}

TEST_CASE("malformed sigma throws InvalidSigma") {
  const DiffSeq d = diffs({1, 1, 2});
  const DiffSeq dp = diffs({3, 4, 3});
  CHECK_THROWS_AS(verify_sigma_for_diffs(d, dp, SigmaMap{{1, 2}}), InvalidSigma);
  CHECK_THROWS_AS(verify_sigma_for_diffs(d, dp, SigmaMap{{1, 2, 4}}), InvalidSigma);
  CHECK_THROWS_AS(verify_sigma_for_diffs(d, dp, SigmaMap{{1, 2, 2}}), InvalidSigma);
  CHECK_THROWS_AS(verify_sigma_for_diffs(d, dp, SigmaMap{{0, 1, 2}}), InvalidSigma);
}

TEST_CASE("find_sigma size handling") {
  CHECK_THROWS_AS(find_sigma(ints({0, 1}), ints({0, 1, 2})), SizeMismatch);
  CHECK_THROWS_AS(find_sigma_for_diffs(diffs({1}), diffs({1, 2})), SizeMismatch);

  // Singletons and empty sets have no gap pairs to separate.
  const auto trivial = find_sigma(ints({4}), ints({9}));
  REQUIRE(trivial.has_value());
  CHECK(trivial->size() == 0);
  CHECK(verify_sigma(ints({4}), ints({9}), *trivial));
}

TEST_CASE("identity sigma for convex maps") {
  const PointMap sq = PointMap::power(2);
  const SigmaMap id3 = identity_sigma_for_convex_map(ints({1, 2, 3}), sq);
  CHECK(id3.image == std::vector<std::size_t>{1, 2});

  // Gap pairs (1,1) and (2,8) stay distinct even though d repeats nothing.
  const SigmaMap id0 = identity_sigma_for_convex_map(ints({0, 1, 3}), sq);
  CHECK(id0.image == std::vector<std::size_t>{1, 2});

  // An affine map duplicates every gap pair with equal gaps.
  const PointMap doubling = PointMap::polynomial({Rational(0), Rational(2)});
  CHECK_THROWS_AS(identity_sigma_for_convex_map(ints({1, 2, 3}), doubling), HypothesisError);
}

TEST_CASE("distinct d makes every permutation valid") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 20; ++round) {
    const std::size_t k = static_cast<std::size_t>(gen::pick(rng, 2, 15));
    const SortedSet a = gen::distinct_gap_set(rng, k);
    const SortedSet ap = gen::distinct_gap_set(rng, k);
    const auto sigma = find_sigma(a, ap);
    REQUIRE(sigma.has_value());
    CHECK(verify_sigma(a, ap, *sigma));
  }
}

TEST_CASE("matcher agrees with permutation backtracking on small grids") {
  // All (d, d') with entries in {1,2} up to length 4: 2^4 * 2^4 per length.
  for (std::size_t len = 1; len <= 4; ++len) {
    const std::size_t total = std::size_t{1} << len;
    for (std::size_t mask_d = 0; mask_d < total; ++mask_d) {
      for (std::size_t mask_p = 0; mask_p < total; ++mask_p) {
        DiffSeq d;
        DiffSeq dp;
        std::vector<Rational> raw_d;
        std::vector<Rational> raw_p;
        for (std::size_t bit = 0; bit < len; ++bit) {
          d.diffs.emplace_back(1 + ((mask_d >> bit) & 1));
          dp.diffs.emplace_back(1 + ((mask_p >> bit) & 1));
          raw_d.push_back(d.diffs.back());
          raw_p.push_back(dp.diffs.back());
        }
        const auto sigma = find_sigma_for_diffs(d, dp);
        const bool expected = oracles::sigma_exists(raw_d, raw_p);
        CHECK(sigma.has_value() == expected);
        if (sigma) CHECK(verify_sigma_for_diffs(d, dp, *sigma));
      }
    }
  }
}

TEST_CASE("matcher agrees with backtracking on random rational inputs") {
  std::mt19937_64 rng(555);
  for (int round = 0; round < 300; ++round) {
    const std::size_t len = static_cast<std::size_t>(gen::pick(rng, 1, 6));
    DiffSeq d;
    DiffSeq dp;
    std::vector<Rational> raw_d;
    std::vector<Rational> raw_p;
    for (std::size_t i = 0; i < len; ++i) {
      d.diffs.emplace_back(Rational(gen::pick(rng, 1, 4), gen::pick(rng, 1, 3)));
      dp.diffs.emplace_back(Rational(gen::pick(rng, 1, 4), gen::pick(rng, 1, 3)));
      raw_d.push_back(d.diffs.back());
      raw_p.push_back(dp.diffs.back());
    }
    const auto sigma = find_sigma_for_diffs(d, dp);
    CHECK(sigma.has_value() == oracles::sigma_exists(raw_d, raw_p));
    if (sigma) CHECK(verify_sigma_for_diffs(d, dp, *sigma));
  }
}

TEST_CASE("find_sigma is deterministic") {
  const DiffSeq d = diffs({2, 2, 5, 5, 7});
  const DiffSeq dp = diffs({3, 3, 3, 9, 9});
  const auto first = find_sigma_for_diffs(d, dp);
  const auto second = find_sigma_for_diffs(d, dp);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->image == second->image);
}
