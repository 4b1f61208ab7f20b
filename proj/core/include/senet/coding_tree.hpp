#ifndef SENET_CODING_TREE_HPP
#define SENET_CODING_TREE_HPP

#include <functional>
#include <random>
#include <string>
#include <utility>

#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

/// Rooted tree whose nodes carry vertex-set markers: the root carries V,
/// children's markers partition the parent's, leaves carry singletons.
/// Canonical trees have no single-child nodes. Root is node 0 at depth 0.
class CodingTree {
 public:
  struct Node {
    int parent = -1;
    std::vector<int> children;
    VertexSet marker;
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_[0]; }
  int height() const;

  /// Root with one leaf per vertex.
  static CodingTree flat(int n);
  /// Two-level tree: one internal node per module (singleton modules become
  /// leaves directly under the root).
  static CodingTree from_partition(const Partition& p);
  /// Three-level tree: module nodes under the root, sub-module nodes inside
  /// each module. sub[j] partitions module j locally; a trivial sub-partition
  /// leaves the module's vertices as direct leaf children.
  static CodingTree two_level(const Partition& top,
                              const std::vector<Partition>& sub);
  /// Recursive random binary splits of V (seeded, reproducible).
  static CodingTree random_binary(int n, std::mt19937_64& rng);

  /// Nested JSON arrays of vertex ids, e.g. [[0,1],[2,[3,4]]].
  std::string to_json() const;
  static CodingTree from_json(const std::string& text);

  /// Build from explicit child lists; markers are derived bottom-up.
  static CodingTree from_nodes(std::vector<Node> nodes);

 private:
  std::vector<Node> nodes_;
};

/// Checks coding-tree structural properties: markers partition correctly at
/// every node and leaf markers biject to 0..n-1.
bool validate_tree(const Graph& g, const CodingTree& t,
                   std::string* diagnostic = nullptr);

/// Structure entropy by coding tree with the cut module function:
/// -sum_{a != root} (g_a/vol) log2(vol(a)/vol(parent(a))).
double hT(const Graph& g, const CodingTree& t);

/// Named map from vertex sets to totals in [0, vol(G)].
struct ModuleFunction {
  enum class Kind { volume, cut, custom };
  Kind kind;
  std::function<double(const Graph&, const VertexSet&)> eval;

  static ModuleFunction volume_kind();
  static ModuleFunction cut_kind();
};

double hT_with_module_function(const Graph& g, const CodingTree& t,
                               const ModuleFunction& f);

/// Minimum hT over coding trees of height <= k, with a witnessing tree.
/// k = 1 is the flat tree; k = 2 enumerates partitions (exact H^2);
/// k = 3 enumerates two-level trees. Exhaustive limits: n <= 12 for k <= 2,
/// n <= 8 for k = 3.
std::pair<double, CodingTree> hK_exact(const Graph& g, int k);

/// Greedy upper bound on H^K for k in {2, 3}: agglomerative partition search
/// lifted to a tree; for k = 3 the agglomeration is reapplied inside each
/// module and kept only when it lowers the total.
std::pair<double, CodingTree> hK_greedy(const Graph& g, int k);

}  // namespace senet

#endif
