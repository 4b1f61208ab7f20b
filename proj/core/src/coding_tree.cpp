#include "senet/coding_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <tuple>

#include "json.hpp"
#include "senet/entropy.hpp"
#include "senet/partition_search.hpp"

namespace senet {

int CodingTree::height() const {
  std::vector<int> depth(nodes_.size(), 0);
  int h = 0;
  for (size_t i = 1; i < nodes_.size(); ++i) {
    depth[i] = depth[nodes_[i].parent] + 1;
    h = std::max(h, depth[i]);
  }
  return h;
}

CodingTree CodingTree::flat(int n) {
  CodingTree t;
  t.nodes_.resize(n + 1);
  t.nodes_[0].parent = -1;
  for (int v = 0; v < n; ++v) {
    t.nodes_[0].marker.push_back(v);
    t.nodes_[0].children.push_back(v + 1);
    t.nodes_[v + 1].parent = 0;
    t.nodes_[v + 1].marker = {v};
  }
  return t;
}

CodingTree CodingTree::from_partition(const Partition& p) {
  CodingTree t;
  t.nodes_.resize(1);
  t.nodes_[0].parent = -1;
  t.nodes_[0].marker.resize(p.size());
  for (int v = 0; v < p.size(); ++v) t.nodes_[0].marker[v] = v;
  for (const VertexSet& mod : p.modules()) {
    int parent = 0;
    if (mod.size() > 1) {
      t.nodes_.push_back({0, {}, mod});
      parent = static_cast<int>(t.nodes_.size()) - 1;
      t.nodes_[0].children.push_back(parent);
    }
    for (int v : mod) {
      t.nodes_.push_back({parent, {}, {v}});
      int leaf = static_cast<int>(t.nodes_.size()) - 1;
      if (mod.size() > 1)
        t.nodes_[parent].children.push_back(leaf);
      else
        t.nodes_[0].children.push_back(leaf);
    }
  }
  return t;
}

CodingTree CodingTree::two_level(const Partition& top,
                                 const std::vector<Partition>& sub) {
  if (static_cast<int>(sub.size()) != top.module_count())
    throw InputError("two_level: one sub-partition per module required");
  CodingTree t;
  t.nodes_.resize(1);
  t.nodes_[0].parent = -1;
  t.nodes_[0].marker.resize(top.size());
  for (int v = 0; v < top.size(); ++v) t.nodes_[0].marker[v] = v;
  std::vector<VertexSet> mods = top.modules();
  for (int j = 0; j < top.module_count(); ++j) {
    const VertexSet& mod = mods[j];
    if (mod.size() == 1) {
      t.nodes_.push_back({0, {}, mod});
      t.nodes_[0].children.push_back(static_cast<int>(t.nodes_.size()) - 1);
      continue;
    }
    t.nodes_.push_back({0, {}, mod});
    int mnode = static_cast<int>(t.nodes_.size()) - 1;
    t.nodes_[0].children.push_back(mnode);
    const Partition& q = sub[j];
    if (static_cast<int>(q.size()) != static_cast<int>(mod.size()))
      throw InputError("two_level: sub-partition size mismatch");
    if (q.module_count() <= 1) {
      // flat module: leaves directly under the module node
      for (int v : mod) {
        t.nodes_.push_back({mnode, {}, {v}});
        t.nodes_[mnode].children.push_back(static_cast<int>(t.nodes_.size()) - 1);
      }
      continue;
    }
    // q is local: index k of q refers to mod[k]
    std::vector<VertexSet> subs(q.module_count());
    for (int k = 0; k < q.size(); ++k) subs[q.module_of(k)].push_back(mod[k]);
    for (const VertexSet& s : subs) {
      int parent = mnode;
      if (s.size() > 1) {
        t.nodes_.push_back({mnode, {}, s});
        parent = static_cast<int>(t.nodes_.size()) - 1;
        t.nodes_[mnode].children.push_back(parent);
        for (int v : s) {
          t.nodes_.push_back({parent, {}, {v}});
          t.nodes_[parent].children.push_back(static_cast<int>(t.nodes_.size()) - 1);
        }
      } else {
        t.nodes_.push_back({mnode, {}, s});
        t.nodes_[mnode].children.push_back(static_cast<int>(t.nodes_.size()) - 1);
      }
    }
  }
  return t;
}

namespace {

void random_split(CodingTree::Node root_stub, std::vector<CodingTree::Node>& nodes,
                  int node_idx, std::mt19937_64& rng) {
  (void)root_stub;
  VertexSet marker = nodes[node_idx].marker;
  if (marker.size() <= 1) return;
  std::shuffle(marker.begin(), marker.end(), rng);
  // non-empty random split
  std::uniform_int_distribution<size_t> pick(1, marker.size() - 1);
  size_t k = pick(rng);
  VertexSet left(marker.begin(), marker.begin() + k);
  VertexSet right(marker.begin() + k, marker.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  for (VertexSet* side : {&left, &right}) {
    nodes.push_back({node_idx, {}, *side});
    int child = static_cast<int>(nodes.size()) - 1;
    nodes[node_idx].children.push_back(child);
    random_split({}, nodes, child, rng);
  }
}

}  // namespace

CodingTree CodingTree::random_binary(int n, std::mt19937_64& rng) {
  CodingTree t;
  t.nodes_.resize(1);
  t.nodes_[0].parent = -1;
  t.nodes_[0].marker.resize(n);
  for (int v = 0; v < n; ++v) t.nodes_[0].marker[v] = v;
  random_split({}, t.nodes_, 0, rng);
  return t;
}

CodingTree CodingTree::from_nodes(std::vector<Node> nodes) {
  CodingTree t;
  t.nodes_ = std::move(nodes);
  return t;
}

namespace {

nlohmann::json node_to_json(const CodingTree& t, int idx) {
  const auto& node = t.nodes()[idx];
  if (node.children.empty()) {
    if (node.marker.size() == 1) return node.marker[0];
    nlohmann::json arr = nlohmann::json::array();
    for (int v : node.marker) arr.push_back(v);
    return arr;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (int c : node.children) arr.push_back(node_to_json(t, c));
  return arr;
}

int json_to_node(const nlohmann::json& j, int parent,
                 std::vector<CodingTree::Node>& nodes) {
  nodes.push_back({parent, {}, {}});
  int idx = static_cast<int>(nodes.size()) - 1;
  if (j.is_number_integer()) {
    nodes[idx].marker = {j.get<int>()};
    return idx;
  }
  if (!j.is_array()) throw InputError("coding tree JSON: expected int or array");
  for (const auto& child : j) {
    int c = json_to_node(child, idx, nodes);
    nodes[idx].children.push_back(c);
    VertexSet merged = nodes[idx].marker;
    merged.insert(merged.end(), nodes[c].marker.begin(), nodes[c].marker.end());
    std::sort(merged.begin(), merged.end());
    nodes[idx].marker = std::move(merged);
  }
  return idx;
}

}  // namespace

std::string CodingTree::to_json() const {
  return node_to_json(*this, 0).dump();
}

CodingTree CodingTree::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Node> nodes;
  json_to_node(j, -1, nodes);
  return from_nodes(std::move(nodes));
}

bool validate_tree(const Graph& g, const CodingTree& t, std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  const auto& nodes = t.nodes();
  if (nodes.empty()) return fail("empty tree");
  VertexSet all(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) all[v] = v;
  VertexSet root_marker = nodes[0].marker;
  std::sort(root_marker.begin(), root_marker.end());
  if (root_marker != all) return fail("root marker is not V");
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.children.empty()) {
      if (node.marker.size() != 1)
        return fail("leaf node " + std::to_string(i) + " marker is not a singleton");
      continue;
    }
    VertexSet merged;
    size_t total = 0;
    for (int c : node.children) {
      if (c < 0 || c >= static_cast<int>(nodes.size()) || nodes[c].parent != static_cast<int>(i))
        return fail("broken parent link at node " + std::to_string(c));
      merged.insert(merged.end(), nodes[c].marker.begin(), nodes[c].marker.end());
      total += nodes[c].marker.size();
    }
    std::sort(merged.begin(), merged.end());
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
      return fail("children of node " + std::to_string(i) + " overlap");
    VertexSet marker = node.marker;
    std::sort(marker.begin(), marker.end());
    if (merged != marker || total != marker.size())
      return fail("children of node " + std::to_string(i) +
                  " do not partition its marker");
  }
  return true;
}

double hT(const Graph& g, const CodingTree& t) {
  return hT_with_module_function(g, t, ModuleFunction::cut_kind());
}

ModuleFunction ModuleFunction::volume_kind() {
  return {Kind::volume,
          [](const Graph& g, const VertexSet& s) { return g.volume(s); }};
}

ModuleFunction ModuleFunction::cut_kind() {
  return {Kind::cut, [](const Graph& g, const VertexSet& s) {
            return g.cut_to_complement(s);
          }};
}

double hT_with_module_function(const Graph& g, const CodingTree& t,
                               const ModuleFunction& f) {
  std::string why;
  if (!validate_tree(g, t, &why)) throw InputError("invalid coding tree: " + why);
  double vol = g.volume();
  const auto& nodes = t.nodes();
  std::vector<double> node_vol(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) node_vol[i] = g.volume(nodes[i].marker);
  double h = 0.0;
  for (size_t i = 1; i < nodes.size(); ++i) {
    double fx = f.eval(g, nodes[i].marker);
    if (fx > 0.0)
      h -= fx * std::log2(node_vol[i] / node_vol[nodes[i].parent]);
  }
  return h / vol;
}

namespace {

// Minimal subtree contribution (bits) for a vertex subset, over all local
// sub-partitions incl. the flat one, used by the height-3 search. Terms are
// the leaf terms plus, for non-trivial sub-modules, -(g_b/vol) log2(V_b/V_X).
struct InnerBest {
  double bits;
  std::vector<int> local_assign;  // over the subset in sorted order; L<=1 => flat
  int local_count;
};

InnerBest best_inner(const Graph& g, const VertexSet& subset) {
  double vol = g.volume();
  int k = static_cast<int>(subset.size());
  double vx = g.volume(subset);
  auto eval = [&](const std::vector<int>& a, int L) {
    std::vector<double> svol(L, 0.0), scut(L, 0.0);
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < k; ++i) pos[subset[i]] = i;
    for (int i = 0; i < k; ++i) svol[a[i]] += g.degree(subset[i]);
    // g_b is the cut to the global complement
    for (int i = 0; i < k; ++i) {
      int v = subset[i];
      for (auto [u, w] : g.neighbors(v))
        if (pos[u] == -1 || a[pos[u]] != a[i]) scut[a[i]] += w;
    }
    double h = 0.0;
    for (int i = 0; i < k; ++i) {
      double d = g.degree(subset[i]);
      h -= d * std::log2(d / svol[a[i]]);
    }
    if (L > 1)
      for (int b = 0; b < L; ++b)
        if (scut[b] > 0.0) h -= scut[b] * std::log2(svol[b] / vx);
    return h / vol;
  };
  InnerBest best;
  best.local_assign.assign(k, 0);
  best.local_count = 1;
  best.bits = eval(best.local_assign, 1);
  if (k <= 1) return best;
  std::vector<int> a(k, 0), prefix_max(k, 0);
  while (next_restricted_growth(a, prefix_max)) {
    int L = *std::max_element(a.begin(), a.end()) + 1;
    double h = eval(a, L);
    if (h < best.bits) {
      best.bits = h;
      best.local_assign = a;
      best.local_count = L;
    }
  }
  return best;
}

}  // namespace

std::pair<double, CodingTree> hK_exact(const Graph& g, int k) {
  if (!g.is_connected()) throw DomainError("hK_exact requires a connected graph");
  int n = g.num_vertices();
  if (k < 1) throw InputError("hK_exact: k must be >= 1");
  if (k == 1) {
    CodingTree t = CodingTree::flat(n);
    return {hT(g, t), t};
  }
  if (k == 2) {
    if (n > 10)
      throw CapacityError("hK_exact: n=" + std::to_string(n) +
                          " exceeds limit 10 for k=2");
    auto [value, p] = exact_h2(g, 10);
    return {value, CodingTree::from_partition(p)};
  }
  if (k == 3) {
    if (n > 8)
      throw CapacityError("hK_exact: n=" + std::to_string(n) +
                          " exceeds limit 8 for k=3");
    double vol = g.volume();
    // memoize the best inner contribution per subset mask
    std::vector<double> inner_bits(size_t(1) << n,
                                   std::numeric_limits<double>::quiet_NaN());
    std::vector<InnerBest> inner(size_t(1) << n);
    auto inner_of = [&](uint32_t mask) -> const InnerBest& {
      if (std::isnan(inner_bits[mask])) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) s.push_back(v);
        inner[mask] = best_inner(g, s);
        inner_bits[mask] = inner[mask].bits;
      }
      return inner[mask];
    };
    std::vector<int> a(n, 0), prefix_max(n, 0);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_top;
    do {
      int L = *std::max_element(a.begin(), a.end()) + 1;
      std::vector<uint32_t> masks(L, 0);
      for (int v = 0; v < n; ++v) masks[a[v]] |= uint32_t(1) << v;
      double total = 0.0;
      for (int j = 0; j < L; ++j) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
          if (masks[j] >> v & 1) s.push_back(v);
        if (L > 1) {
          double gj = g.cut_to_complement(s);
          if (gj > 0.0) total -= gj / vol * std::log2(g.volume(s) / vol);
        }
        total += inner_of(masks[j]).bits;
      }
      if (total < best) {
        best = total;
        best_top = a;
      }
    } while (next_restricted_growth(a, prefix_max));
    Partition top(best_top);
    std::vector<Partition> sub;
    std::vector<VertexSet> mods = top.modules();
    for (const VertexSet& mod : mods) {
      uint32_t mask = 0;
      for (int v : mod) mask |= uint32_t(1) << v;
      const InnerBest& ib = inner_of(mask);
      sub.emplace_back(ib.local_assign);
    }
    return {best, CodingTree::two_level(top, sub)};
  }
  throw CapacityError("hK_exact: optimal search implemented for k <= 3 only");
}

std::pair<double, CodingTree> hK_greedy(const Graph& g, int k) {
  if (k != 2 && k != 3) throw InputError("hK_greedy: k must be 2 or 3");
  auto [h2, top] = greedy_h2(g);
  if (k == 2) return {h2, CodingTree::from_partition(top)};
  // k = 3: agglomerate inside each module, keep only improving sub-splits
  double vol = g.volume();
  std::vector<VertexSet> mods = top.modules();
  std::vector<Partition> sub;
  for (const VertexSet& mod : mods) {
    int sz = static_cast<int>(mod.size());
    if (sz <= 2) {
      sub.push_back(Partition::trivial(sz));
      continue;
    }
    double vx = g.volume(mod);
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < sz; ++i) pos[mod[i]] = i;
    // local greedy agglomeration; child-module terms normalize by vx
    std::vector<char> alive(sz, 1);
    std::vector<double> svol(sz), scut(sz);
    std::vector<std::vector<int>> members(sz);
    std::map<std::pair<int, int>, double> cut;
    for (int i = 0; i < sz; ++i) {
      int v = mod[i];
      svol[i] = g.degree(v);
      scut[i] = 0.0;
      members[i] = {i};
      for (auto [u, w] : g.neighbors(v)) {
        scut[i] += w;
        if (pos[u] != -1 && pos[u] > i) cut[{i, pos[u]}] += w;
      }
    }
    auto term = [&](double V, double c) {
      double x = V * std::log2(V);
      if (c > 0.0) x -= c * std::log2(V / vx);
      return x;
    };
    auto pair_delta = [&](int i, int j) {
      auto it = cut.find(std::minmax(i, j));
      double c = it == cut.end() ? 0.0 : it->second;
      return (term(svol[i] + svol[j], scut[i] + scut[j] - 2.0 * c) -
              term(svol[i], scut[i]) - term(svol[j], scut[j])) /
             vol;
    };
    using Entry = std::tuple<double, int, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (const auto& [key, c] : cut)
      heap.emplace(pair_delta(key.first, key.second), key.first, key.second);
    while (!heap.empty()) {
      auto [delta, i, j] = heap.top();
      heap.pop();
      if (!alive[i] || !alive[j]) continue;
      double current = pair_delta(i, j);
      if (current != delta) {
        heap.emplace(current, i, j);
        continue;
      }
      if (delta >= 0.0) break;
      auto cij = cut.find(std::minmax(i, j));
      double c = cij == cut.end() ? 0.0 : cij->second;
      svol[i] += svol[j];
      scut[i] += scut[j] - 2.0 * c;
      alive[j] = 0;
      members[i].insert(members[i].end(), members[j].begin(), members[j].end());
      if (cij != cut.end()) cut.erase(cij);
      for (int other = 0; other < sz; ++other) {
        if (!alive[other] || other == i) continue;
        auto it = cut.find(std::minmax(j, other));
        if (it != cut.end()) {
          cut[std::minmax(i, other)] += it->second;
          cut.erase(it);
        }
      }
      for (int other = 0; other < sz; ++other) {
        if (!alive[other] || other == i) continue;
        if (cut.count(std::minmax(i, other)))
          heap.emplace(pair_delta(i, other), std::min(i, other), std::max(i, other));
      }
    }
    std::vector<int> assign(sz, -1);
    for (int id = 0; id < sz; ++id)
      if (alive[id])
        for (int v : members[id]) assign[v] = id;
    sub.emplace_back(std::move(assign));
  }
  CodingTree t = CodingTree::two_level(top, sub);
  return {hT(g, t), t};
}

}  // namespace senet
