#ifndef SENET_GENERATORS_HPP
#define SENET_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

/// Complete binary tree of depth H (root at depth 1, leaves at depth H):
/// n = 2^H - 1 vertices, vol = 2^(H+1) - 4. Vertex 0 is the root; the
/// children of vertex v are 2v+1 and 2v+2.
Graph complete_binary_tree(int depth);

/// Partition of the depth-H complete binary tree: every depth-(H-k+1)
/// subtree is a module (2^(H-k) of them, size 2^k - 1 each) plus the top
/// 2^(H-k) - 1 vertices as one module. 1 <= k <= H-1.
Partition tree_partition(int depth, int k);

/// n x n grid, row-major vertex ids: vol = 4n(n-1), m = 2n(n-1).
Graph grid(int side);

/// Axis-aligned k x k blocks (ragged last row/column when k does not
/// divide n).
Partition grid_partition(int side, int block);

Graph complete_graph(int n);
Graph cycle(int n);
Graph path(int n);

/// Near-equal split of 0..n-1 into `parts` consecutive blocks (sizes differ
/// by at most one). The witness used for complete-graph resistance.
Partition equal_partition(int n, int parts);

/// Simple connected d-regular graph via the pairing model with whole-restart
/// rejection on self-loops, multi-edges or disconnected outcomes.
/// Deterministic given the seed. Requires n*d even, d < n.
Graph random_regular(int n, int d, uint64_t rng_seed, int max_restarts = 10000);

/// Random connected simple graph: a uniform random labelled spanning tree
/// plus each remaining pair independently with probability extra_p.
Graph random_connected_graph(int n, double extra_p, std::mt19937_64& rng);

/// Uniform random partition of 0..n-1 into at most max_modules nonempty
/// modules (each vertex assigned independently, empty labels dropped).
Partition random_partition(int n, int max_modules, std::mt19937_64& rng);

/// Spanning-tree partition of a bounded-degree connected graph: on a BFS
/// spanning tree rooted at vertex 0, repeatedly take the deepest remaining
/// vertex, ascend l = max(1, floor(log_d log2 n) - 1) ancestors (clamped at
/// the remaining component's root), and cut that subtree as a module.
Partition spanning_tree_partition(const Graph& g);

struct SecurityModelParams {
  int n = 0;           // target vertex count
  double a = 0.0;      // homophyly exponent, >= 0
  int d = 2;           // edges per new vertex, >= 2
  int n0 = 0;          // seed-graph size; 0 means default d+1
  uint64_t rng_seed = 0;
};

struct GenerationTrace {
  std::vector<int> colors;          // vertex -> color id (= seed order)
  std::vector<char> seed_flags;     // vertex -> is a seed
  std::vector<int> seed_vertex;     // color -> its seed vertex
  std::vector<int> seed_birth;      // color -> creation step (1-based vertex id + 1)
  std::vector<int> seed_count_at;   // per-step |C_t| (index t-1)
  int edge_shortfall = 0;           // without-replacement deficits, total
};

/// Homophyly growth model S(n, a, d): seed probability p_i = min(1, (ln i)^-a).
/// A seed vertex gets one preferential-attachment edge over all vertices plus
/// d-1 edges to uniformly random distinct seeds; a non-seed vertex joins a
/// uniformly random existing color with d preferential edges inside that
/// color class (fewer if the class is smaller, counted in edge_shortfall).
/// Natural logarithm throughout. Deterministic given rng_seed.
std::pair<Graph, GenerationTrace> security_model(const SecurityModelParams& params);

/// Modules = color classes of the trace.
Partition natural_partition(const GenerationTrace& trace);

struct CommunityStat {
  int color;
  int size;
  int birth_step;       // t_S
  double global_edges;  // g_S: weight of edges leaving the color class
  double size_prediction;  // ln^(a+1) t - ln^(a+1) t_S
};

struct TraceStatistics {
  int color_count;
  int max_community_size;
  std::vector<CommunityStat> communities;
  // mean g_S over communities born after T2 = n / ln^b n, and the matching
  // expectation caps (monitored, not asserted)
  double late_mean_global_edges;
  int late_community_count;
  double global_edge_cap;  // 5/2 (a+1) b^2 (lnln n)^2 for a>1; 8 b^2 (..) for
                           // a=1; 5 b^2 (..) for a<1
};

TraceStatistics trace_statistics(const GenerationTrace& trace, const Graph& g,
                                 double a, double b = 1.0);

}  // namespace senet

#endif
