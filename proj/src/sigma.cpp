#include "sumsets/sigma.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "sumsets/errors.hpp"

namespace sumsets {

namespace {

// Dinic on the tiny class graph: at most 2(k-1)+2 nodes.
struct FlowNetwork {
  struct Edge {
    int to;
    long long cap;
    int rev;
  };

  explicit FlowNetwork(int node_count)
      : graph(node_count), level(node_count), iter(node_count) {}

  int add_edge(int from, int to, long long cap) {
    const int index = static_cast<int>(graph[from].size());
    graph[from].push_back({to, cap, static_cast<int>(graph[to].size())});
    graph[to].push_back({from, 0, index});
    return index;
  }

  bool bfs(int source, int sink) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue;
    queue.push_back(source);
    level[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (const Edge& e : graph[v]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level[sink] >= 0;
  }

  long long dfs(int v, int sink, long long limit) {
    if (v == sink) return limit;
    for (int& i = iter[v]; i < static_cast<int>(graph[v].size()); ++i) {
      Edge& e = graph[v][i];
      if (e.cap > 0 && level[v] < level[e.to]) {
        const long long pushed = dfs(e.to, sink, std::min(limit, e.cap));
        if (pushed > 0) {
          e.cap -= pushed;
          graph[e.to][e.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  long long max_flow(int source, int sink) {
    long long total = 0;
    while (bfs(source, sink)) {
      std::fill(iter.begin(), iter.end(), 0);
      long long pushed;
      while ((pushed = dfs(source, sink, std::numeric_limits<long long>::max())) > 0) {
        total += pushed;
      }
    }
    return total;
  }

  std::vector<std::vector<Edge>> graph;
  std::vector<int> level;
  std::vector<int> iter;
};

// Distinct values ascending, each with its member indices ascending.
std::vector<std::pair<Rational, std::vector<std::size_t>>> value_classes(
    const std::vector<Rational>& values) {
  std::map<Rational, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < values.size(); ++i) classes[values[i]].push_back(i);
  return {classes.begin(), classes.end()};
}

void check_permutation(const SigmaMap& sigma, std::size_t count) {
  if (sigma.size() != count) {
    throw InvalidSigma("sigma has " + std::to_string(sigma.size()) +
                       " entries, expected " + std::to_string(count));
  }
  std::vector<bool> seen(count, false);
  for (const std::size_t v : sigma.image) {
    if (v < 1 || v > count) {
      throw InvalidSigma("sigma entry " + std::to_string(v) + " outside 1.." +
                         std::to_string(count));
    }
    if (seen[v - 1]) {
      throw InvalidSigma("sigma repeats entry " + std::to_string(v));
    }
    seen[v - 1] = true;
  }
}

}  // namespace

SigmaMap SigmaMap::identity(std::size_t count) {
  SigmaMap sigma;
  sigma.image.resize(count);
  for (std::size_t i = 0; i < count; ++i) sigma.image[i] = i + 1;
  return sigma;
}

std::optional<SigmaMap> find_sigma_for_diffs(const DiffSeq& d, const DiffSeq& d_prime) {
  if (d.size() != d_prime.size()) {
    throw SizeMismatch("gap sequences of sizes " + std::to_string(d.size()) + " and " +
                       std::to_string(d_prime.size()));
  }
  const std::size_t count = d.size();
  if (count == 0) return SigmaMap{};

  const auto left = value_classes(d.diffs);
  const auto right = value_classes(d_prime.diffs);
  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());

  // 0 = source, 1..nl = d-classes, nl+1..nl+nr = d'-classes, last = sink.
  // A valid sigma uses each (value, value') pair at most once, hence the
  // unit capacities across the middle.
  const int source = 0;
  const int sink = nl + nr + 1;
  FlowNetwork network(nl + nr + 2);
  for (int a = 0; a < nl; ++a) {
    network.add_edge(source, 1 + a, static_cast<long long>(left[a].second.size()));
  }
  std::vector<std::vector<int>> cross(nl, std::vector<int>(nr));
  for (int a = 0; a < nl; ++a) {
    for (int b = 0; b < nr; ++b) {
      cross[a][b] = network.add_edge(1 + a, 1 + nl + b, 1);
    }
  }
  for (int b = 0; b < nr; ++b) {
    network.add_edge(1 + nl + b, sink, static_cast<long long>(right[b].second.size()));
  }
  if (network.max_flow(source, sink) != static_cast<long long>(count)) {
    return std::nullopt;
  }

  // Deterministic recovery: walk d-classes ascending; within one, hand its
  // ascending member indices to the saturated d'-classes ascending. Each
  // d'-class then receives units in ascending d-class order and hands out
  // its own member indices ascending.
  std::vector<std::size_t> image(count, 0);
  std::vector<std::size_t> next_member_of_right(nr, 0);
  for (int a = 0; a < nl; ++a) {
    std::size_t member = 0;
    for (int b = 0; b < nr; ++b) {
      if (network.graph[1 + a][cross[a][b]].cap == 0) {
        const std::size_t i = left[a].second[member++];
        const std::size_t j = right[b].second[next_member_of_right[b]++];
        image[i] = j + 1;
      }
    }
    if (member != left[a].second.size()) {
      throw Error("flow recovery dropped a unit");  // unreachable at full flow
    }
  }
  SigmaMap sigma;
  sigma.image = std::move(image);
  return sigma;
}

std::optional<SigmaMap> find_sigma(const SortedSet& a, const SortedSet& a_prime) {
  if (a.size() != a_prime.size()) {
    throw SizeMismatch("sets of sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(a_prime.size()));
  }
  if (a.size() <= 1) return SigmaMap{};
  return find_sigma_for_diffs(consecutive_differences(a),
                              consecutive_differences(a_prime));
}

bool verify_sigma_for_diffs(const DiffSeq& d, const DiffSeq& d_prime,
                            const SigmaMap& sigma) {
  if (d.size() != d_prime.size()) {
    throw SizeMismatch("gap sequences of sizes " + std::to_string(d.size()) + " and " +
                       std::to_string(d_prime.size()));
  }
  check_permutation(sigma, d.size());
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    pairs.emplace_back(d[i], d_prime[sigma.image[i] - 1]);
  }
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool verify_sigma(const SortedSet& a, const SortedSet& a_prime, const SigmaMap& sigma) {
  if (a.size() != a_prime.size()) {
    throw SizeMismatch("sets of sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(a_prime.size()));
  }
  if (a.size() <= 1) {
    check_permutation(sigma, 0);
    return true;
  }
  return verify_sigma_for_diffs(consecutive_differences(a),
                                consecutive_differences(a_prime), sigma);
}

SigmaMap identity_sigma_for_convex_map(const SortedSet& a, const PointMap& f) {
  const SortedSet image = apply_map(a, f);
  if (a.size() <= 1) return SigmaMap{};
  const SigmaMap sigma = SigmaMap::identity(a.size() - 1);
  if (!verify_sigma(a, image, sigma)) {
    throw HypothesisError("identity matching fails for " + f.describe());
  }
  return sigma;
}

}  // namespace sumsets
