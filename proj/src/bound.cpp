#include "lcs/bound.hpp"

#include <queue>

namespace lcs {

LannerScan max_lanner_size(const VectorSystem& s, int cap) {
  if (cap < 1) throw input_error("max_lanner_size: cap must be positive");
  LannerScan scan;
  scan.cap_reached = cap < s.size();
  int limit = std::min(cap, s.size());
  for_each_connected_subset(s, limit, [&](const std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) > scan.max_size && is_lanner(subsystem(s, subset))) {
      scan.max_size = static_cast<int>(subset.size());
      scan.witness = subset;
    }
    return true;
  });
  return scan;
}

namespace {

// All-pairs graph distances inside the induced subgraph (BFS per vertex).
std::vector<std::vector<int>> subgraph_distances(const VectorSystem& s,
                                                 const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<std::vector<int>> dist(k, std::vector<int>(k, -1));
  for (int src = 0; src < k; ++src) {
    std::queue<int> q;
    dist[src][src] = 0;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < k; ++w)
        if (dist[src][w] < 0 && s.has_edge(subset[v], subset[w])) {
          dist[src][w] = dist[src][v] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

std::pair<long long, long long> pair_counts(const std::vector<std::vector<int>>& dist, int l) {
  long long near = 0, far = 0;
  const int k = static_cast<int>(dist.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int d = dist[i][j];
      if (d < 0) continue;  // unreachable pairs are excluded
      if (d <= l - 2) ++near;
      else if (d <= 2 * l - 3) ++far;
    }
  return {near, far};
}

}  // namespace

std::pair<Rational, Rational> pair_ratios_of_subgraph(const VectorSystem& s,
                                                      const std::vector<int>& subset, int l) {
  auto [near, far] = pair_counts(subgraph_distances(s, subset), l);
  Rational n(static_cast<long long>(subset.size()));
  return {Rational(near) / n, Rational(far) / n};
}

PairCounts elliptic_pair_counts(const VectorSystem& s, int l, int cap) {
  if (l < 2) throw input_error("elliptic_pair_counts: l must be at least 2");
  if (cap < 1) throw input_error("elliptic_pair_counts: cap must be positive");
  PairCounts out;
  out.c1 = 0;
  out.c2 = 0;
  out.cap_reached = cap < s.size();
  int limit = std::min(cap, s.size());
  for_each_connected_subset(s, limit, [&](const std::vector<int>& subset) {
    VectorSystem sub = subsystem(s, subset);
    if (!is_negative_definite(sub.gram())) return true;
    auto [r1, r2] = pair_ratios_of_subgraph(s, subset, l);
    if (r1 > out.c1) {
      out.c1 = r1;
      out.c1_witness = subset;
    }
    if (r2 > out.c2) {
      out.c2 = r2;
      out.c2_witness = subset;
    }
    return true;
  });
  return out;
}

Rational dimension_bound(const Rational& c1, const Rational& c2) {
  if (c1 < 0 || c2 < 0) throw domain_error("dimension_bound: constants must be nonnegative");
  return Rational(96) * (c1 + c2 / 3) + 68;
}

}  // namespace lcs
