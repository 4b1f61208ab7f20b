#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/graph_io.hpp"

using namespace senet;

namespace {

std::map<int, int> degree_histogram(const Graph& g) {
  std::map<int, int> h;
  for (int v = 0; v < g.num_vertices(); ++v)
    ++h[static_cast<int>(std::lround(g.degree(v)))];
  return h;
}

}  // namespace

TEST_CASE("complete binary tree") {
  Graph t2 = complete_binary_tree(2);
  CHECK(t2.num_vertices() == 3);
  CHECK(t2.volume() == doctest::Approx(4.0));
  Graph t3 = complete_binary_tree(3);
  CHECK(t3.num_vertices() == 7);
  CHECK(t3.volume() == doctest::Approx(12.0));
  Graph t10 = complete_binary_tree(10);
  CHECK(t10.num_vertices() == 1023);
  std::map<int, int> h = degree_histogram(t10);
  CHECK(h[2] == 1);
  CHECK(h[1] == 512);
  CHECK(h[3] == 510);
  CHECK(t10.is_connected());
  CHECK_THROWS_AS(complete_binary_tree(1), InputError);
}

TEST_CASE("tree partition sizes") {
  Partition p = tree_partition(3, 1);
  CHECK(p.module_count() == 5);  // top of size 3 + four singleton leaves
  std::vector<int> sizes;
  for (const VertexSet& m : p.modules()) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 1, 1, 1, 3});

  for (int H : {6, 9}) {
    for (int k = 1; k < H; ++k) {
      Partition q = tree_partition(H, k);
      CHECK(q.module_count() == (1 << (H - k)) + 1);
      std::map<int, int> size_count;
      for (const VertexSet& m : q.modules()) ++size_count[m.size()];
      CHECK(size_count[(1 << k) - 1] >= (1 << (H - k)));
      CHECK(size_count[(1 << (H - k)) - 1] >= 1);
    }
  }
  CHECK_THROWS_AS(tree_partition(5, 0), InputError);
  CHECK_THROWS_AS(tree_partition(5, 5), InputError);
}

TEST_CASE("grid") {
  Graph g2 = grid(2);  // C4
  CHECK(g2.num_vertices() == 4);
  CHECK(degree_histogram(g2) == std::map<int, int>{{2, 4}});
  CHECK(grid(3).volume() == doctest::Approx(24.0));
  CHECK(grid(10).num_edges() == 180);
  CHECK_THROWS_AS(grid(1), InputError);
}

TEST_CASE("grid partition") {
  Partition p = grid_partition(4, 2);
  CHECK(p.module_count() == 4);
  for (const VertexSet& m : p.modules()) CHECK(m.size() == 4);
  Graph g3 = grid(3);
  Partition t = grid_partition(3, 3);
  CHECK(t.module_count() == 1);
  CHECK(hP(g3, t) == doctest::Approx(h1(g3)));
}

TEST_CASE("basic families") {
  CHECK(complete_graph(4).num_edges() == 6);
  CHECK(degree_histogram(cycle(6)) == std::map<int, int>{{2, 6}});
  Graph p2 = path(2);
  CHECK(p2.num_edges() == 1);
  Partition ep = equal_partition(10, 3);
  std::vector<int> sizes;
  for (const VertexSet& m : ep.modules()) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{3, 3, 4});
}

TEST_CASE("random regular") {
  Graph k4 = random_regular(4, 3, 1);
  CHECK(k4.num_edges() == 6);  // forced K4
  Graph g = random_regular(30, 3, 99);
  CHECK(degree_histogram(g) == std::map<int, int>{{3, 30}});
  CHECK(g.is_connected());
  // determinism
  Graph g2 = random_regular(30, 3, 99);
  std::ostringstream a, b;
  write_edge_list(a, g);
  write_edge_list(b, g2);
  CHECK(a.str() == b.str());
  // n=6, d=2 connected 2-regular is necessarily a 6-cycle
  Graph c = random_regular(6, 2, 5);
  CHECK(degree_histogram(c) == std::map<int, int>{{2, 6}});
  CHECK(c.is_connected());
  CHECK_THROWS_AS(random_regular(5, 3, 1), InputError);
  CHECK_THROWS_AS(random_regular(4, 4, 1), InputError);
}

TEST_CASE("spanning tree partition") {
  // path(8): l = 1, modules are pairs cut from the deep end
  Partition pp = spanning_tree_partition(path(8));
  CHECK(pp.module_count() == 4);
  for (const VertexSet& m : pp.modules()) CHECK(m.size() == 2);

  // star: the clamp can swallow the whole tree into one module
  Graph star(6,
             {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}});
  Partition sp = spanning_tree_partition(star);
  CHECK(sp.module_count() == 1);
  CHECK(resistance_of_partition(star, sp) == doctest::Approx(0.0));

  // random 3-regular: non-final module sizes within [1, d^(l+1)]
  Graph g = random_regular(256, 3, 42);
  Partition p = spanning_tree_partition(g);
  auto mods = p.modules();
  int cap = 9;  // d^(l+1) with d = 3, l = 1
  int oversized = 0;
  for (const VertexSet& m : mods)
    if (static_cast<int>(m.size()) > cap) ++oversized;
  CHECK(oversized <= 1);
  CHECK(hP(g, p) <= h1(g) + 1e-9);
}

TEST_CASE("security model determinism and structure") {
  SecurityModelParams params;
  params.n = 1000;
  params.a = 1.5;
  params.d = 4;
  params.rng_seed = 31337;
  auto [g1, t1] = security_model(params);
  auto [g2, t2] = security_model(params);
  std::ostringstream a, b;
  write_edge_list(a, g1);
  write_edge_list(b, g2);
  CHECK(a.str() == b.str());
  CHECK(t1.colors == t2.colors);
  CHECK(g1.is_connected());
  CHECK(g1.unit_weights());

  // one seed per color; seed counts monotone
  Partition nat = natural_partition(t1);
  CHECK(nat.module_count() == static_cast<int>(t1.seed_vertex.size()));
  int seeds = 0;
  for (char f : t1.seed_flags) seeds += f;
  CHECK(seeds == static_cast<int>(t1.seed_vertex.size()));
  for (size_t i = 1; i < t1.seed_count_at.size(); ++i)
    CHECK(t1.seed_count_at[i] >= t1.seed_count_at[i - 1]);
  CHECK(t1.seed_count_at.back() == seeds);
  CHECK(t1.edge_shortfall >= 0);
}

TEST_CASE("security model a=0 degenerates to all seeds") {
  SecurityModelParams params;
  params.n = 200;
  params.a = 0.0;
  params.d = 3;
  params.rng_seed = 4;
  auto [g, t] = security_model(params);
  Partition nat = natural_partition(t);
  CHECK(nat.module_count() == 200);
  CHECK(hP(g, nat) == doctest::Approx(h1(g)).epsilon(1e-9));
  TraceStatistics s = trace_statistics(t, g, 0.0);
  CHECK(s.color_count == 200);
  CHECK(s.max_community_size == 1);
}

TEST_CASE("trace statistics branches") {
  for (double a : {2.0, 1.0, 0.5}) {
    SecurityModelParams params;
    params.n = 3000;
    params.a = a;
    params.d = 3;
    params.rng_seed = 11;
    auto [g, t] = security_model(params);
    TraceStatistics s = trace_statistics(t, g, a);
    CHECK(s.color_count > 0);
    CHECK(std::isfinite(s.global_edge_cap));
    CHECK(s.global_edge_cap > 0.0);
    CHECK(static_cast<int>(s.communities.size()) == s.color_count);
    for (const CommunityStat& cs : s.communities) {
      CHECK(cs.size >= 1);
      CHECK(cs.global_edges >= 0.0);
    }
  }
}

TEST_CASE("random helpers") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    int n = std::uniform_int_distribution<int>(1, 30)(rng);
    Graph g = random_connected_graph(n, 0.2, rng);
    CHECK(g.is_connected());
    Partition p = random_partition(std::max(n, 2), 5, rng);
    CHECK(p.module_count() >= 1);
    CHECK(p.module_count() <= 5);
  }
}
