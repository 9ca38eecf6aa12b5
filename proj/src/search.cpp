#include "sumsets/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "sumsets/errors.hpp"
#include "sumsets/sorted_set.hpp"
#include "sumsets/sumset.hpp"

namespace sumsets {

namespace {

void check_difference_vector(const std::vector<long long>& diffs) {
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] < 1 || (i > 0 && diffs[i] <= diffs[i - 1])) {
      throw Error("difference vector must be strictly increasing and positive");
    }
  }
}

SortedSet set_from_diffs(const std::vector<long long>& diffs) {
  std::vector<Rational> points;
  points.reserve(diffs.size() + 1);
  Rational acc = 0;
  points.push_back(acc);
  for (const long long d : diffs) {
    acc += d;
    points.push_back(acc);
  }
  return SortedSet::from_sorted(std::move(points));
}

// The search loop's own size bookkeeping is never trusted: the witness goes
// back through the exact sumset path before it is returned.
void verify_witness(const SearchRecord& record) {
  const SortedSet a = set_from_diffs(record.witness_diffs);
  if (!is_convex(a)) throw Error("search produced a non-convex witness");
  if (static_cast<long long>(sumset(a, a).size()) != record.best_size) {
    throw Error("witness self-sumset does not match the reported size");
  }
}

}  // namespace

SelfSumsetObjective::SelfSumsetObjective(std::vector<long long> diffs)
    : diffs_(std::move(diffs)) {
  check_difference_vector(diffs_);
  std::vector<long long> points{0};
  points.reserve(diffs_.size() + 1);
  for (const long long d : diffs_) points.push_back(points.back() + d);
  const int n = static_cast<int>(points.size());
  sorted_sums_.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      sorted_sums_.push_back(Entry{points[u] + points[v], u, v});
    }
  }
  std::sort(sorted_sums_.begin(), sorted_sums_.end(),
            [](const Entry& a, const Entry& b) {
              return std::tie(a.sum, a.u, a.v) < std::tie(b.sum, b.u, b.v);
            });
  for (std::size_t i = 0; i < sorted_sums_.size(); ++i) {
    if (i == 0 || sorted_sums_[i].sum != sorted_sums_[i - 1].sum) ++current_size_;
  }
}

long long SelfSumsetObjective::recompute(const std::vector<long long>& diffs) {
  std::vector<long long> points{0};
  points.reserve(diffs.size() + 1);
  for (const long long d : diffs) points.push_back(points.back() + d);
  std::vector<long long> sums;
  sums.reserve(points.size() * (points.size() + 1) / 2);
  for (std::size_t u = 0; u < points.size(); ++u) {
    for (std::size_t v = u; v < points.size(); ++v) {
      sums.push_back(points[u] + points[v]);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return static_cast<long long>(sums.size());
}

void SelfSumsetObjective::merge_shifted(std::size_t index, long long delta,
                                        std::vector<Entry>* merged,
                                        long long* distinct) const {
  // Points at positions >= index+1 move by delta, so entry (u, v) moves by
  // delta * (#endpoints past the cut); each shift group stays sorted.
  const int cut = static_cast<int>(index) + 1;
  std::array<std::vector<std::size_t>, 3> groups;
  for (std::size_t i = 0; i < sorted_sums_.size(); ++i) {
    const Entry& e = sorted_sums_[i];
    groups[(e.u >= cut) + (e.v >= cut)].push_back(i);
  }
  const std::array<long long, 3> shift = {0, delta, 2 * delta};
  std::array<std::size_t, 3> pos = {0, 0, 0};
  long long count = 0;
  long long last = 0;
  bool have_last = false;
  for (;;) {
    int pick = -1;
    long long pick_value = 0;
    for (int g = 0; g < 3; ++g) {
      if (pos[g] < groups[g].size()) {
        const long long value = sorted_sums_[groups[g][pos[g]]].sum + shift[g];
        if (pick < 0 || value < pick_value) {
          pick = g;
          pick_value = value;
        }
      }
    }
    if (pick < 0) break;
    const Entry& e = sorted_sums_[groups[pick][pos[pick]]];
    ++pos[pick];
    if (!have_last || pick_value != last) {
      ++count;
      last = pick_value;
      have_last = true;
    }
    if (merged) merged->push_back(Entry{pick_value, e.u, e.v});
  }
  *distinct = count;
}

long long SelfSumsetObjective::evaluate_move(std::size_t index, long long delta) const {
  if (index >= diffs_.size()) throw Error("move index out of range");
  const long long moved = diffs_[index] + delta;
  if (moved < 1 || (index > 0 && moved <= diffs_[index - 1]) ||
      (index + 1 < diffs_.size() && moved >= diffs_[index + 1])) {
    throw Error("move breaks strict monotonicity");
  }
  if (delta == 0) return current_size_;
  long long distinct = 0;
  merge_shifted(index, delta, nullptr, &distinct);
  return distinct;
}

void SelfSumsetObjective::apply_move(std::size_t index, long long delta) {
  evaluate_move(index, delta);  // validates; cheap relative to the merge
  if (delta == 0) return;
  std::vector<Entry> merged;
  merged.reserve(sorted_sums_.size());
  long long distinct = 0;
  merge_shifted(index, delta, &merged, &distinct);
  sorted_sums_ = std::move(merged);
  current_size_ = distinct;
  diffs_[index] += delta;
}

SearchRecord exhaustive_min_sumset(int n, long long width_budget) {
  if (n < 2) throw TooSmall("search needs n >= 2");
  const long long minimum_width = static_cast<long long>(n) * (n - 1) / 2;
  if (width_budget < minimum_width) {
    throw BudgetTooSmall("budget " + std::to_string(width_budget) +
                         " below the staircase width " + std::to_string(minimum_width));
  }
  const int entries = n - 1;
  std::vector<long long> d;
  d.reserve(entries);
  long long best = -1;
  long long best_half = -1;
  std::vector<long long> best_d;

  // Lexicographic DFS over strictly increasing positive vectors; the first
  // minimizer found is the lexicographically least one, and strict
  // improvement keeps it.
  auto rec = [&](auto&& self, long long total) -> void {
    if (static_cast<int>(d.size()) == entries) {
      long long g = 0;
      for (const long long x : d) g = std::gcd(g, x);
      if (g != 1) return;  // |A+A| is dilation-invariant
      const long long size = SelfSumsetObjective::recompute(d);
      if (best < 0 || size < best) {
        best = size;
        best_d = d;
      }
      if (2 * total <= width_budget && (best_half < 0 || size < best_half)) {
        best_half = size;
      }
      return;
    }
    const long long rem = entries - static_cast<long long>(d.size()) - 1;
    for (long long x = d.empty() ? 1 : d.back() + 1;; ++x) {
      // Cheapest completion above x is the staircase x+1, ..., x+rem.
      const long long tail = x + rem * x + rem * (rem + 1) / 2;
      if (total + tail > width_budget) break;
      d.push_back(x);
      self(self, total + x);
      d.pop_back();
    }
  };
  rec(rec, 0);
  if (best < 0) throw Error("budget admitted no candidate");

  SearchRecord record;
  record.n = n;
  record.best_size = best;
  record.witness_diffs = std::move(best_d);
  record.mode = SearchRecord::Mode::Exhaustive;
  record.width_budget = width_budget;
  record.complete = best_half >= 0 && best_half == best;
  record.gcd_normalized = true;
  verify_witness(record);
  return record;
}

SearchRecord anneal_min_sumset(int n, long long steps, std::uint64_t seed) {
  if (n < 2) throw TooSmall("search needs n >= 2");
  if (steps < 1) throw TooSmall("needs steps >= 1");
  const std::size_t entries = static_cast<std::size_t>(n - 1);
  std::vector<long long> d(entries);
  for (std::size_t i = 0; i < entries; ++i) d[i] = static_cast<long long>(i) + 1;

  SelfSumsetObjective objective(d);
  long long current = objective.current_size();
  long long best = current;
  std::vector<long long> best_d = d;

  // Raw modulo on mt19937_64 keeps the draw sequence pinned down; the
  // standard distributions are not specified bit-for-bit.
  std::mt19937_64 rng(seed);
  const double t0 = 2.0;
  const double t_min = 0.01;
  const double alpha = std::pow(t_min / t0, 1.0 / static_cast<double>(steps));
  double temperature = t0;
  bool incremental = true;
  long long evaluations = 0;

  for (long long step = 0; step < steps; ++step) {
    const std::size_t index = static_cast<std::size_t>(rng() % entries);
    const long long delta = (rng() % 2 == 0) ? 1 : -1;
    const long long moved = d[index] + delta;
    const bool valid = moved >= 1 && (index == 0 || moved > d[index - 1]) &&
                       (index + 1 == entries || moved < d[index + 1]);
    if (!valid) {
      temperature *= alpha;  // a rejected proposal still cools
      continue;
    }
    std::vector<long long> candidate = d;
    candidate[index] = moved;
    ++evaluations;
    long long size;
    if (incremental) {
      size = objective.evaluate_move(index, delta);
      if (evaluations % 1024 == 0) {
        const long long full = SelfSumsetObjective::recompute(candidate);
        if (full != size) {
          incremental = false;  // permanent fallback to full recomputation
          size = full;
        }
      }
    } else {
      size = SelfSumsetObjective::recompute(candidate);
    }
    bool accept = size <= current;
    if (!accept) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      accept = u < std::exp(-static_cast<double>(size - current) / temperature);
    }
    if (accept) {
      if (incremental) objective.apply_move(index, delta);
      d = std::move(candidate);
      current = size;
      if (current < best) {
        best = current;
        best_d = d;
      }
    }
    temperature *= alpha;
  }

  SearchRecord record;
  record.n = n;
  record.best_size = best;
  record.witness_diffs = std::move(best_d);
  record.mode = SearchRecord::Mode::Anneal;
  record.steps = steps;
  record.seed = seed;
  record.complete = false;
  verify_witness(record);
  return record;
}

}  // namespace sumsets
