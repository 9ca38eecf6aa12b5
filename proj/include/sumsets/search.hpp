#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumsets {

struct SearchRecord {
  enum class Mode { Exhaustive, Anneal };

  int n = 0;
  long long best_size = 0;
  std::vector<long long> witness_diffs;  // strictly increasing, positive
  Mode mode = Mode::Exhaustive;
  long long width_budget = 0;      // exhaustive only
  long long steps = 0;             // anneal only
  std::uint64_t seed = 0;          // anneal only
  bool complete = false;
  bool gcd_normalized = false;     // exhaustive canonicalization marker
  std::optional<std::string> timestamp;  // stamped when persisted, not at search time
};

// |A+A| of the convex set reconstructed from a difference vector, with an
// incremental re-evaluation path for single-entry moves. Perturbing d_i
// shifts every later prefix sum by the same amount, so the sorted sum list
// splits into three still-sorted groups (shift 0, delta, 2*delta) that a
// three-way merge recounts without sorting.
class SelfSumsetObjective {
 public:
  explicit SelfSumsetObjective(std::vector<long long> diffs);

  long long current_size() const { return current_size_; }
  const std::vector<long long>& diffs() const { return diffs_; }

  // |A+A| after diffs[index] += delta, without committing. The move must
  // keep the vector strictly increasing and positive.
  long long evaluate_move(std::size_t index, long long delta) const;

  void apply_move(std::size_t index, long long delta);

  // Independent full recomputation (generate, sort, count).
  static long long recompute(const std::vector<long long>& diffs);

 private:
  struct Entry {
    long long sum;
    int u;
    int v;  // u <= v, indices into the prefix-sum sequence
  };

  void merge_shifted(std::size_t index, long long delta,
                     std::vector<Entry>* merged, long long* distinct) const;

  std::vector<long long> diffs_;
  std::vector<Entry> sorted_sums_;
  long long current_size_ = 0;
};

// Minimum |A+A| over convex n-element integer sets, canonicalized to a
// strictly increasing positive difference vector with gcd 1 and total
// width at most width_budget. Lexicographic DFS; returns the lexicographically
// least witness among minimizers. The complete flag is the half-budget
// marker: true only when the minimum is already achieved within half the
// budget (no finite budget is known to be provably sufficient).
SearchRecord exhaustive_min_sumset(int n, long long width_budget);

// Simulated annealing over difference vectors: single-entry +/-1 moves,
// geometric cooling, seeded deterministic randomness. Never asserted
// minimal. The incremental objective is cross-checked against a full
// recomputation every 1024th evaluation and falls back to full
// recomputation if they ever disagree.
SearchRecord anneal_min_sumset(int n, long long steps, std::uint64_t seed);

}  // namespace sumsets
