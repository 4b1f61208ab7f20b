#include "senet/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

namespace senet {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("negative vertex count");
  adj_.resize(n_);
  degree_.assign(n_, 0.0);
  min_w_ = std::numeric_limits<double>::infinity();
  max_w_ = 0.0;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw InputError("edge endpoint out of range: (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0))
      throw InputError("non-positive weight on edge (" + std::to_string(e.u) +
                       "," + std::to_string(e.v) + ")");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw InputError("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    total_weight_ += e.w;
    min_w_ = std::min(min_w_, e.w);
    max_w_ = std::max(max_w_, e.w);
    if (e.w != 1.0) unit_weights_ = false;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (double d : degree_) volume_ += d;

  // connectivity via traversal from vertex 0
  if (n_ == 0) {
    connected_ = false;
  } else {
    std::vector<char> vis(n_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto& [u, w] : adj_[v]) {
        (void)w;
        if (!vis[u]) {
          vis[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    connected_ = (count == n_);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(n_) + ")");
}

const std::vector<std::pair<int, double>>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

double Graph::degree(int v) const {
  check_vertex(v);
  return degree_[v];
}

double Graph::weight_ratio() const {
  if (edges_.empty()) return 1.0;
  return max_w_ / min_w_;
}

double Graph::volume(const VertexSet& s) const {
  double vol = 0.0;
  for (int v : s) {
    check_vertex(v);
    vol += degree_[v];
  }
  return vol;
}

double Graph::cut_weight(const VertexSet& a, const VertexSet& b) const {
  std::vector<int8_t> side(n_, 0);
  for (int v : a) {
    check_vertex(v);
    side[v] = 1;
  }
  for (int v : b) {
    check_vertex(v);
    if (side[v] == 1) throw InputError("cut_weight: sets overlap at vertex " +
                                       std::to_string(v));
    side[v] = 2;
  }
  double cut = 0.0;
  for (const Edge& e : edges_) {
    if ((side[e.u] == 1 && side[e.v] == 2) || (side[e.u] == 2 && side[e.v] == 1))
      cut += e.w;
  }
  return cut;
}

double Graph::cut_to_complement(const VertexSet& s) const {
  std::vector<char> in(n_, 0);
  for (int v : s) {
    check_vertex(v);
    in[v] = 1;
  }
  double cut = 0.0;
  for (const Edge& e : edges_)
    if (in[e.u] != in[e.v]) cut += e.w;
  return cut;
}

double Graph::conductance(const VertexSet& s) const {
  if (s.empty()) throw DomainError("conductance of the empty set is undefined");
  if (static_cast<int>(s.size()) >= n_)
    throw DomainError("conductance of the full vertex set is undefined");
  double vs = volume(s);
  double vrest = volume_ - vs;
  double denom = std::min(vs, vrest);
  if (denom <= 0.0) throw DomainError("conductance: zero-volume side");
  return cut_to_complement(s) / denom;
}

double graph_conductance(const Graph& g, int exhaustive_limit) {
  if (!g.is_connected()) throw DomainError("graph_conductance requires a connected graph");
  int n = g.num_vertices();
  if (n > exhaustive_limit)
    throw CapacityError("graph_conductance: n=" + std::to_string(n) +
                        " exceeds exhaustive limit " +
                        std::to_string(exhaustive_limit));
  if (n < 2) throw DomainError("graph_conductance requires n >= 2");
  double best = std::numeric_limits<double>::infinity();
  // enumerate subsets containing vertex 0; each {S, S-bar} class once
  uint64_t total = uint64_t(1) << (n - 1);
  for (uint64_t mask = 0; mask + 1 < total; ++mask) {
    uint64_t bits = (mask << 1) | 1;  // vertex 0 always in S; skip S = V
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (bits >> v & 1) s.push_back(v);
    best = std::min(best, g.conductance(s));
  }
  return best;
}

VertexSet complement(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.num_vertices(), 0);
  for (int v : s) in[v] = 1;
  VertexSet out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

VertexSet Graph::all_vertices() const {
  VertexSet s(n_);
  for (int v = 0; v < n_; ++v) s[v] = v;
  return s;
}

}  // namespace senet
