#ifndef SENET_PARTITION_SEARCH_HPP
#define SENET_PARTITION_SEARCH_HPP

#include <utility>

#include "senet/entropy.hpp"
#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

/// Exact change in hP from merging modules i and j, computed incrementally.
struct MergeDelta {
  int i;
  int j;
  double delta_hP;   // hP(after merge) - hP(before)
  double cut;        // e(X_i, X_j), weighted
  double vol_i;
  double vol_j;
};

MergeDelta merge_delta(const Graph& g, const Partition& p, int i, int j);

/// Advance `a` to the lexicographic successor among restricted-growth strings
/// (a[0] = 0, a[i] <= max(a[0..i-1]) + 1); prefix_max[i] = max(a[0..i-1]) is
/// maintained alongside. Returns false once the last string was reached.
bool next_restricted_growth(std::vector<int>& a, std::vector<int>& prefix_max);

/// Global minimum of hP over all set partitions, enumerated as
/// restricted-growth strings in lexicographic order (ties keep the first,
/// i.e. lexicographically least, argmin). Requires n <= limit.
std::pair<double, Partition> exact_h2(const Graph& g, int limit = 12);

/// Agglomerative upper bound on H^2: from all-singletons, repeatedly apply
/// the most negative-delta merge among edge-connected module pairs; stop when
/// no merge decreases hP. Ties broken by smallest (i, j).
std::pair<double, Partition> greedy_h2(const Graph& g);

/// Merging-Splitting Lemma criterion for regular graphs. y1 and y2 must
/// partition x1. predicted: splitting x1 into y1|y2 raises (or keeps) hP
/// iff lhs >= rhs.
struct MergeSplitCriterion {
  double lhs;  // e(Y1,Y2) * log2(n/|X1|)
  double rhs;  // e(Y1,Y1) * log2(|X1|/|Y1|) + e(Y2,Y2) * log2(|X1|/|Y2|)
  bool split_raises_entropy;  // lhs >= rhs
};

MergeSplitCriterion merge_split_criterion(const Graph& g, const VertexSet& x1,
                                          const VertexSet& y1,
                                          const VertexSet& y2);

enum class H2Mode { exact, greedy, construction };

/// Full resistance report R = h1 - h2 with h2 from the chosen mode. In
/// construction mode the supplied partition is the witness (falls back to
/// greedy when absent). In greedy/construction modes h2 is an upper bound on
/// the true H^2, so R is a lower bound; method strings carry the mode.
EntropyReport resistance(const Graph& g, H2Mode mode,
                         const Partition* construction = nullptr);

}  // namespace senet

#endif
