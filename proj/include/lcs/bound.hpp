#ifndef LCS_BOUND_HPP
#define LCS_BOUND_HPP

#include <vector>

#include "lcs/system.hpp"

namespace lcs {

struct LannerScan {
  int max_size = 0;              // largest Lanner subsystem found (0 if none)
  std::vector<int> witness;      // a subsystem achieving it
  bool cap_reached = false;      // cap < n, so the result is a lower bound
};

// Largest Lanner subsystem over connected subsets of at most `cap` vertices.
// Lanner graphs are connected, so scanning connected subsets is complete.
LannerScan max_lanner_size(const VectorSystem& s, int cap);

struct PairCounts {
  Rational c1;                    // max over subgraphs of #(pairs d <= l-2) / n
  Rational c2;                    // max of #(pairs l-2 < d <= 2l-3) / n
  std::vector<int> c1_witness;    // argmax subgraphs, for audit
  std::vector<int> c2_witness;
  bool cap_reached = false;
};

// Distance-pair ratios over connected elliptic subgraphs (graph distance
// measured inside the subgraph).
PairCounts elliptic_pair_counts(const VectorSystem& s, int l, int cap);

// 96*(c1 + c2/3) + 68, exact.
Rational dimension_bound(const Rational& c1, const Rational& c2);

// Re-computes the pair ratios on one concrete subgraph; used to audit the
// witnesses returned above.
std::pair<Rational, Rational> pair_ratios_of_subgraph(const VectorSystem& s,
                                                      const std::vector<int>& subset, int l);

}  // namespace lcs

#endif
