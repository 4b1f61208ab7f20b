#include "senet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <string>

namespace senet {

Graph complete_binary_tree(int depth) {
  if (depth < 2) throw InputError("complete_binary_tree requires depth >= 2");
  int n = (1 << depth) - 1;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int v = 0; 2 * v + 2 < n; ++v) {
    edges.push_back({v, 2 * v + 1, 1.0});
    edges.push_back({v, 2 * v + 2, 1.0});
  }
  return Graph(n, std::move(edges));
}

Partition tree_partition(int depth, int k) {
  if (k < 1 || k > depth - 1)
    throw InputError("tree_partition requires 1 <= k <= depth-1");
  int n = (1 << depth) - 1;
  int top = (1 << (depth - k)) - 1;  // vertices of depth <= H-k (0-based ids)
  std::vector<int> assign(n);
  // heap layout: vertices 0..top-1 are the shallow part; each subtree rooted
  // at r in [top, 2*top] is one module, and descendants of r stay with r
  for (int v = 0; v < n; ++v) {
    if (v < top) {
      assign[v] = 0;
      continue;
    }
    int r = v;
    while (r >= 2 * top + 1) r = (r - 1) / 2;
    assign[v] = 1 + (r - top);
  }
  return Partition(std::move(assign));
}

Graph grid(int side) {
  if (side < 2) throw InputError("grid requires side >= 2");
  int n = side * side;
  std::vector<Edge> edges;
  edges.reserve(2 * side * (side - 1));
  auto id = [side](int r, int c) { return r * side + c; };
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < side) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  return Graph(n, std::move(edges));
}

Partition grid_partition(int side, int block) {
  if (block < 1) throw InputError("grid_partition requires block >= 1");
  int blocks_per_row = (side + block - 1) / block;
  std::vector<int> assign(side * side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      assign[r * side + c] = (r / block) * blocks_per_row + c / block;
  return Partition(std::move(assign));
}

Graph complete_graph(int n) {
  if (n < 2) throw InputError("complete_graph requires n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1.0});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 2) throw InputError("path requires n >= 2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return Graph(n, std::move(edges));
}

Partition equal_partition(int n, int parts) {
  if (parts < 1 || parts > n) throw InputError("equal_partition: bad part count");
  std::vector<int> assign(n);
  int base = n / parts, extra = n % parts;
  int v = 0;
  for (int j = 0; j < parts; ++j) {
    int size = base + (j < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) assign[v++] = j;
  }
  return Partition(std::move(assign));
}

Graph random_regular(int n, int d, uint64_t rng_seed, int max_restarts) {
  if (d >= n) throw InputError("random_regular requires d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw InputError("random_regular requires n*d even");
  std::mt19937_64 rng(rng_seed);
  std::vector<int> stubs(static_cast<size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    std::vector<std::vector<char>> have;  // lazily sized adjacency bitmap
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    bool ok = true;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      size_t key = static_cast<size_t>(std::min(u, v)) * n + std::max(u, v);
      if (seen[key]) {
        ok = false;
        break;
      }
      seen[key] = 1;
      edges.push_back({u, v, 1.0});
    }
    (void)have;
    if (!ok) continue;
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw std::runtime_error("random_regular: rejection budget exhausted (retryable)");
}

Graph random_connected_graph(int n, double extra_p, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random_connected_graph requires n >= 1");
  std::vector<Edge> edges;
  // random spanning tree: attach each vertex to a uniform earlier one
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v, 1.0});
  }
  std::vector<char> tree_edge(static_cast<size_t>(n) * n, 0);
  for (const Edge& e : edges)
    tree_edge[static_cast<size_t>(std::min(e.u, e.v)) * n + std::max(e.u, e.v)] = 1;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (tree_edge[static_cast<size_t>(u) * n + v]) continue;
      if (coin(rng) < extra_p) edges.push_back({u, v, 1.0});
    }
  return Graph(n, std::move(edges));
}

Partition random_partition(int n, int max_modules, std::mt19937_64& rng) {
  if (n < 1 || max_modules < 1) throw InputError("random_partition: bad sizes");
  std::uniform_int_distribution<int> pick(0, max_modules - 1);
  std::vector<int> raw(n);
  for (int v = 0; v < n; ++v) raw[v] = pick(rng);
  return Partition(std::move(raw));  // canonicalization drops empty labels
}

Partition spanning_tree_partition(const Graph& g) {
  if (!g.is_connected())
    throw DomainError("spanning_tree_partition requires a connected graph");
  int n = g.num_vertices();
  int maxdeg = 0;
  for (int v = 0; v < n; ++v)
    maxdeg = std::max(maxdeg, static_cast<int>(g.neighbors(v).size()));
  if (maxdeg < 2) throw DomainError("spanning_tree_partition requires max degree >= 2");
  // BFS spanning tree rooted at 0
  std::vector<int> parent(n, -1), depth(n, 0), order;
  std::vector<char> vis(n, 0);
  std::deque<int> queue{0};
  vis[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (auto [u, w] : g.neighbors(v)) {
      (void)w;
      if (!vis[u]) {
        vis[u] = 1;
        parent[u] = v;
        depth[u] = depth[v] + 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) children[parent[v]].push_back(v);

  int l = std::max(
      1, static_cast<int>(std::floor(std::log(std::log2(static_cast<double>(n))) /
                                     std::log(static_cast<double>(maxdeg)))) -
             1);

  std::vector<int> assign(n, -1);
  std::vector<char> removed(n, 0);
  int module_id = 0;
  int remaining = n;
  while (remaining > 0) {
    // deepest remaining vertex (ties: smallest id via scan order)
    int deepest = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (deepest == -1 || depth[v] > depth[deepest])) deepest = v;
    // ascend l ancestors, clamped at the remaining component's root (the
    // first vertex whose parent is removed or absent)
    int root = deepest;
    for (int step = 0; step < l; ++step) {
      int p = parent[root];
      if (p < 0 || removed[p]) break;
      root = p;
    }
    // cut the subtree of `root` among remaining vertices
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      removed[v] = 1;
      assign[v] = module_id;
      --remaining;
      for (int c : children[v])
        if (!removed[c]) stack.push_back(c);
    }
    ++module_id;
  }
  return Partition(std::move(assign));
}

}  // namespace senet
