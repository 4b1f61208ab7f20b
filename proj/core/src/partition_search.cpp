#include "senet/partition_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace senet {

namespace {

// Per-module contribution to vol*hP, excluding the constant -sum d log2 d:
// c(V, g) = V log2 V - g log2(V / vol).
inline double module_term(double V, double gcut, double vol) {
  double c = V * std::log2(V);
  if (gcut > 0.0) c -= gcut * std::log2(V / vol);
  return c;
}

}  // namespace

MergeDelta merge_delta(const Graph& g, const Partition& p, int i, int j) {
  if (i < 0 || i >= p.module_count() || j < 0 || j >= p.module_count() || i == j)
    throw InputError("merge_delta: invalid module pair");
  if (p.size() != g.num_vertices())
    throw InputError("merge_delta: partition size does not match graph");
  double vol = g.volume();
  double vi = 0.0, vj = 0.0, gi = 0.0, gj = 0.0, cut = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int a = p.module_of(v);
    if (a == i) vi += g.degree(v);
    if (a == j) vj += g.degree(v);
  }
  for (const Edge& e : g.edges()) {
    int a = p.module_of(e.u), b = p.module_of(e.v);
    if (a == b) continue;
    if (a == i || b == i) gi += e.w;
    if (a == j || b == j) gj += e.w;
    if ((a == i && b == j) || (a == j && b == i)) cut += e.w;
  }
  double merged = module_term(vi + vj, gi + gj - 2.0 * cut, vol);
  double delta = (merged - module_term(vi, gi, vol) - module_term(vj, gj, vol)) / vol;
  return {i, j, delta, cut, vi, vj};
}

bool next_restricted_growth(std::vector<int>& a, std::vector<int>& prefix_max) {
  // lexicographic successor of an RGS: a[i] may be at most prefix_max[i] + 1,
  // where prefix_max[i] = max(a[0..i-1]) and a[0] = 0 is fixed
  int n = static_cast<int>(a.size());
  for (int i = n - 1; i > 0; --i) {
    if (a[i] <= prefix_max[i]) {
      ++a[i];
      for (int k = i + 1; k < n; ++k) {
        a[k] = 0;
        prefix_max[k] = std::max(prefix_max[k - 1], a[k - 1]);
      }
      return true;
    }
  }
  return false;
}

std::pair<double, Partition> exact_h2(const Graph& g, int limit) {
  if (!g.is_connected()) throw DomainError("exact_h2 requires a connected graph");
  int n = g.num_vertices();
  if (n > limit)
    throw CapacityError("exact_h2: n=" + std::to_string(n) +
                        " exceeds enumeration limit " + std::to_string(limit));
  std::vector<int> a(n, 0), prefix_max(n, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_a = a;
  do {
    int L = *std::max_element(a.begin(), a.end()) + 1;
    double h = hP_assignment(g, a, L);
    if (h < best) {
      best = h;
      best_a = a;
    }
  } while (next_restricted_growth(a, prefix_max));
  return {best, Partition(best_a)};
}

std::pair<double, Partition> greedy_h2(const Graph& g) {
  if (!g.is_connected()) throw DomainError("greedy_h2 requires a connected graph");
  int n = g.num_vertices();
  double vol = g.volume();
  std::vector<char> alive(n, 1);
  std::vector<double> mvol(n), mcut(n);
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) {
    mvol[v] = g.degree(v);
    mcut[v] = g.degree(v);
    members[v] = {v};
  }
  // cut weights between module pairs, keyed (min, max)
  std::map<std::pair<int, int>, double> cut;
  for (const Edge& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    cut[key] += e.w;
  }
  auto pair_delta = [&](int i, int j) {
    auto it = cut.find(std::minmax(i, j));
    double c = it == cut.end() ? 0.0 : it->second;
    double merged = module_term(mvol[i] + mvol[j], mcut[i] + mcut[j] - 2.0 * c, vol);
    return (merged - module_term(mvol[i], mcut[i], vol) -
            module_term(mvol[j], mcut[j], vol)) /
           vol;
  };
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (const auto& [key, c] : cut) heap.emplace(pair_delta(key.first, key.second), key.first, key.second);

  // module adjacency for re-seeding the heap after merges
  std::vector<std::vector<int>> madj(n);
  for (const auto& [key, c] : cut) {
    madj[key.first].push_back(key.second);
    madj[key.second].push_back(key.first);
  }

  while (!heap.empty()) {
    auto [delta, i, j] = heap.top();
    heap.pop();
    if (!alive[i] || !alive[j]) continue;
    double current = pair_delta(i, j);
    if (current != delta) {  // stale entry
      heap.emplace(current, i, j);
      continue;
    }
    if (delta >= 0.0) break;  // no merge decreases hP
    // merge j into i (i < j by key order)
    auto cij = cut.find({i, j});
    double c = cij == cut.end() ? 0.0 : cij->second;
    mvol[i] += mvol[j];
    mcut[i] += mcut[j] - 2.0 * c;
    alive[j] = 0;
    members[i].insert(members[i].end(), members[j].begin(), members[j].end());
    members[j].clear();
    members[j].shrink_to_fit();
    if (cij != cut.end()) cut.erase(cij);
    // fold j's cut entries into i's
    std::vector<int> neighbors;
    for (int k : madj[j]) {
      if (!alive[k] || k == i) continue;
      auto it = cut.find(std::minmax(j, k));
      if (it == cut.end()) continue;
      double w = it->second;
      cut.erase(it);
      cut[std::minmax(i, k)] += w;
      neighbors.push_back(k);
    }
    for (int k : madj[i])
      if (alive[k] && k != i) neighbors.push_back(k);
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    madj[i] = neighbors;
    for (int k : neighbors) {
      auto key = std::minmax(i, k);
      heap.emplace(pair_delta(key.first, key.second), key.first, key.second);
    }
  }
  std::vector<int> assign(n, -1);
  for (int id = 0; id < n; ++id)
    if (alive[id])
      for (int v : members[id]) assign[v] = id;
  Partition p{std::move(assign)};
  return {hP(g, p), p};
}

MergeSplitCriterion merge_split_criterion(const Graph& g, const VertexSet& x1,
                                          const VertexSet& y1,
                                          const VertexSet& y2) {
  // regularity check
  int n = g.num_vertices();
  if (n == 0) throw DomainError("empty graph");
  double d0 = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (std::abs(g.degree(v) - d0) > 1e-12 * std::max(1.0, d0))
      throw DomainError("merge_split_criterion requires a regular graph");
  if (y1.empty() || y2.empty())
    throw InputError("merge_split_criterion: empty side");
  // y1, y2 must partition x1
  std::vector<char> in(n, 0);
  for (int v : y1) in[v] = 1;
  for (int v : y2) {
    if (in[v]) throw InputError("merge_split_criterion: y1 and y2 overlap");
    in[v] = 2;
  }
  VertexSet join;
  join.reserve(y1.size() + y2.size());
  join.insert(join.end(), y1.begin(), y1.end());
  join.insert(join.end(), y2.begin(), y2.end());
  std::sort(join.begin(), join.end());
  VertexSet x1s = x1;
  std::sort(x1s.begin(), x1s.end());
  if (join != x1s)
    throw InputError("merge_split_criterion: y1 and y2 do not partition x1");

  auto internal_weight = [&](const VertexSet& s) {
    std::vector<char> mem(n, 0);
    for (int v : s) mem[v] = 1;
    double w = 0.0;
    for (const Edge& e : g.edges())
      if (mem[e.u] && mem[e.v]) w += e.w;
    return w;
  };
  double e12 = g.cut_weight(y1, y2);
  double e11 = internal_weight(y1);
  double e22 = internal_weight(y2);
  double nx = static_cast<double>(x1s.size());
  MergeSplitCriterion c;
  c.lhs = e12 * std::log2(static_cast<double>(n) / nx);
  c.rhs = e11 * std::log2(nx / static_cast<double>(y1.size())) +
          e22 * std::log2(nx / static_cast<double>(y2.size()));
  c.split_raises_entropy = c.lhs >= c.rhs;
  return c;
}

EntropyReport resistance(const Graph& g, H2Mode mode, const Partition* construction) {
  if (!g.is_connected()) throw DomainError("resistance requires a connected graph");
  switch (mode) {
    case H2Mode::exact: {
      auto [h2, p] = exact_h2(g);
      return make_report(g, p, "exact");
    }
    case H2Mode::greedy: {
      auto [h2, p] = greedy_h2(g);
      return make_report(g, p, "greedy");
    }
    case H2Mode::construction: {
      if (construction) {
        if (construction->size() != g.num_vertices())
          throw InputError("construction partition does not match graph");
        return make_report(g, *construction, "construction");
      }
      auto [h2, p] = greedy_h2(g);
      return make_report(g, p, "greedy");
    }
  }
  throw InputError("unknown mode");
}

}  // namespace senet
