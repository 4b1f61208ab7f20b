#ifndef SENET_GRAPH_HPP
#define SENET_GRAPH_HPP

#include <utility>
#include <vector>

#include "senet/errors.hpp"

namespace senet {

/// Sorted set of vertex ids.
using VertexSet = std::vector<int>;

struct Edge {
  int u;
  int v;
  double w;
};

/// Immutable weighted undirected simple graph. Vertices are dense ids
/// 0..n-1; unweighted graphs use weight 1. Construction rejects self-loops,
/// duplicate edges and non-positive weights.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, double>>& neighbors(int v) const;

  /// Weighted degree of v.
  double degree(int v) const;
  /// vol(G) = sum of all weighted degrees = 2 * total edge weight.
  double volume() const { return volume_; }
  double total_weight() const { return total_weight_; }
  /// max edge weight / min edge weight, >= 1.
  double weight_ratio() const;
  bool unit_weights() const { return unit_weights_; }
  bool is_connected() const { return connected_; }

  /// Sum of degrees over s. s must be a subset of V.
  double volume(const VertexSet& s) const;
  /// Total weight of edges with one endpoint in a and the other in b.
  /// a and b must be disjoint.
  double cut_weight(const VertexSet& a, const VertexSet& b) const;
  /// Total weight of edges leaving s.
  double cut_to_complement(const VertexSet& s) const;
  /// Phi(s) = cut(s, s-bar) / min{vol(s), vol(s-bar)}. s must be a
  /// non-empty proper subset of V.
  double conductance(const VertexSet& s) const;

  VertexSet all_vertices() const;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> degree_;
  double volume_ = 0.0;
  double total_weight_ = 0.0;
  double min_w_ = 0.0;
  double max_w_ = 0.0;
  bool unit_weights_ = true;
  bool connected_ = false;
};

/// Minimum conductance over non-empty proper subsets, by exhaustive
/// enumeration of 2^(n-1) subsets. Requires a connected graph and
/// n <= exhaustive_limit.
double graph_conductance(const Graph& g, int exhaustive_limit = 20);

VertexSet complement(const Graph& g, const VertexSet& s);

}  // namespace senet

#endif
