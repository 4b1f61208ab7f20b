#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "senet/coding_tree.hpp"
#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/partition_search.hpp"

using namespace senet;

TEST_CASE("restricted growth string enumeration") {
  // n = 4 must enumerate exactly Bell(4) = 15 set partitions
  std::vector<int> a(4, 0), prefix_max(4, 0);
  int count = 0;
  do {
    ++count;
  } while (next_restricted_growth(a, prefix_max));
  CHECK(count == 15);
}

TEST_CASE("exact H2") {
  Graph k2 = complete_graph(2);
  CHECK(exact_h2(k2).first == doctest::Approx(1.0));

  // complete graphs: argmin has 2 or 3 near-equal modules
  for (int n = 7; n <= 9; ++n) {
    auto [h2, p] = exact_h2(complete_graph(n));
    int L = p.module_count();
    CHECK((L == 2 || L == 3));
    int mn = n, mx = 0;
    for (const VertexSet& m : p.modules()) {
      mn = std::min<int>(mn, m.size());
      mx = std::max<int>(mx, m.size());
    }
    CHECK(mx - mn <= 1);
  }

  CHECK(exact_h2(cycle(6)).first == hK_exact(cycle(6), 2).first);
  CHECK_THROWS_AS(exact_h2(complete_graph(13)), CapacityError);
  Graph disc(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK_THROWS_AS(exact_h2(disc), DomainError);
}

TEST_CASE("greedy H2 upper bound chain") {
  Graph k4 = complete_graph(4);
  CHECK(greedy_h2(k4).first == doctest::Approx(exact_h2(k4).first));
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    Graph g = random_connected_graph(n, 0.35, rng);
    double ex = exact_h2(g).first;
    auto [gr, gp] = greedy_h2(g);
    CHECK(gr >= ex - 1e-9);
    CHECK(gr <= h1(g) + 1e-9);
    CHECK(gr == doctest::Approx(hP(g, gp)).epsilon(1e-12));
  }
  // known bound: complete binary tree depth 12 stays below log2 log2 n + 5
  Graph cbt = complete_binary_tree(12);
  double n = cbt.num_vertices();
  CHECK(greedy_h2(cbt).first <= std::log2(std::log2(n)) + 5.0);
}

TEST_CASE("merge delta matches recomputation") {
  Graph c6 = cycle(6);
  Partition arcs({0, 0, 0, 1, 1, 1});
  MergeDelta d = merge_delta(c6, arcs, 0, 1);
  CHECK(d.cut == doctest::Approx(2.0));
  CHECK(d.delta_hP ==
        doctest::Approx(h1(c6) - hP(c6, arcs)).epsilon(1e-9));  // to {V}

  std::mt19937_64 rng(31);
  int triples = 0;
  while (triples < 1000) {
    int nn = std::uniform_int_distribution<int>(4, 24)(rng);
    Graph g = random_connected_graph(nn, 0.3, rng);
    Partition p = random_partition(nn, std::min(nn, 6), rng);
    if (p.module_count() < 2) continue;
    int i = std::uniform_int_distribution<int>(0, p.module_count() - 1)(rng);
    int j = std::uniform_int_distribution<int>(0, p.module_count() - 2)(rng);
    if (j >= i) ++j;
    MergeDelta md = merge_delta(g, p, i, j);
    double direct = hP(g, p.merged(i, j)) - hP(g, p);
    CHECK(std::abs(md.delta_hP - direct) < 1e-9);
    ++triples;
  }
  CHECK_THROWS_AS(merge_delta(c6, arcs, 0, 0), InputError);
  CHECK_THROWS_AS(merge_delta(c6, arcs, 0, 5), InputError);
}

TEST_CASE("merging-splitting criterion") {
  Graph k4 = complete_graph(4);
  auto c = merge_split_criterion(k4, {0, 1, 2, 3}, {0, 1}, {2, 3});
  CHECK(c.lhs == doctest::Approx(0.0));
  CHECK(c.rhs == doctest::Approx(2.0));
  CHECK_FALSE(c.split_raises_entropy);
  CHECK(hP(k4, Partition({0, 0, 1, 1})) < h1(k4));

  Graph c6 = cycle(6);
  auto c2 = merge_split_criterion(c6, {0, 1, 2, 3, 4, 5}, {0, 1, 2}, {3, 4, 5});
  CHECK(c2.lhs == doctest::Approx(0.0));
  CHECK(c2.rhs == doctest::Approx(4.0));

  // C4 split into opposite pairs: exact tie
  Graph c4 = cycle(4);
  auto c3 = merge_split_criterion(c4, {0, 1, 2, 3}, {0, 2}, {1, 3});
  CHECK(c3.lhs == doctest::Approx(0.0));
  CHECK(c3.rhs == doctest::Approx(0.0));
  double diff = hP(c4, Partition({0, 1, 0, 1})) - h1(c4);
  CHECK(std::abs(diff) < 1e-9);

  Graph p3 = path(3);  // not regular
  CHECK_THROWS_AS(merge_split_criterion(p3, {0, 1}, {0}, {1}), DomainError);
  CHECK_THROWS_AS(merge_split_criterion(k4, {0, 1, 2}, {0}, {1}), InputError);
  CHECK_THROWS_AS(merge_split_criterion(k4, {0, 1}, {0, 1}, {1}), InputError);
}

TEST_CASE("resistance reports") {
  for (int n = 7; n <= 9; ++n) {
    EntropyReport r = resistance(complete_graph(n), H2Mode::exact);
    CHECK(r.method == "exact");
    CHECK(r.resistance < std::log2(std::exp(1.0)));
    CHECK(r.resistance > 0.0);
  }
  Graph k4 = complete_graph(4);
  Partition trivial = Partition::trivial(4);
  EntropyReport r0 = resistance(k4, H2Mode::construction, &trivial);
  CHECK(r0.resistance == doctest::Approx(0.0));
  CHECK(r0.method == "construction");

  Graph cbt = complete_binary_tree(12);
  int k = static_cast<int>(std::ceil(std::log2(12.0))) - 1;
  Partition w = tree_partition(12, k);
  EntropyReport rt = resistance(cbt, H2Mode::construction, &w);
  double n = cbt.num_vertices();
  CHECK(rt.resistance >= std::log2(n) - std::log2(std::log2(n)) - 5.0);
}
