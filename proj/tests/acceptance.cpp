// End-to-end acceptance checks: one pass/fail line per criterion, nonzero
// exit if any fail. Tolerances are frozen; values come from closed forms or
// from the exhaustive oracles in the library.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "senet/coding_tree.hpp"
#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/partition_search.hpp"
#include "senet/spectral.hpp"

using namespace senet;

namespace {

int g_failures = 0;

void report(int num, const char* name, bool ok, const std::string& detail = "") {
  std::printf("criterion %2d (%s): %s%s%s\n", num, name, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------- 1
void resistance_law_identity() {
  std::mt19937_64 rng(101);
  int bad = 0;
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(2, 50)(rng);
    Graph g = random_connected_graph(n, 0.12, rng);
    Partition p = random_partition(n, std::min(n, 8), rng);
    if (std::abs((h1(g) - hP(g, p)) - resistance_of_partition(g, p)) >= 1e-9)
      ++bad;
  }
  report(1, "resistance-law identity, 200 random pairs", bad == 0,
         std::to_string(200 - bad) + "/200 exact");
}

// ---------------------------------------------------------------- 2
void exact_h2_oracle_crosscheck() {
  std::mt19937_64 rng(202);
  int bad = 0, total = 220;
  for (int i = 0; i < total; ++i) {
    int n = std::uniform_int_distribution<int>(3, 8)(rng);
    Graph g = random_connected_graph(n, 0.35, rng);
    auto [ev, ep] = exact_h2(g);
    auto [tv, tt] = hK_exact(g, 2);
    bool ok = (ev == tv);  // bit-for-bit
    // identical tie-breaking: the witnessing tree's top level must be the
    // same partition
    std::vector<VertexSet> mods;
    for (int child : tt.root().children)
      mods.push_back(tt.nodes()[child].marker);
    ok = ok && (Partition::from_modules(n, mods) == ep);
    double gv = greedy_h2(g).first;
    ok = ok && (gv >= ev - 1e-9);
    if (!ok) ++bad;
  }
  report(2, "exact H2 equals height-2 tree search bit-for-bit", bad == 0,
         std::to_string(total - bad) + "/" + std::to_string(total));
}

// ---------------------------------------------------------------- 3
void complete_graphs() {
  bool ok = true;
  std::string detail;
  for (int n = 7; n <= 12; ++n) {
    auto [h2, p] = exact_h2(complete_graph(n));
    int L = p.module_count();
    int mn = n, mx = 0;
    for (const VertexSet& m : p.modules()) {
      mn = std::min<int>(mn, m.size());
      mx = std::max<int>(mx, m.size());
    }
    if (!((L == 2 || L == 3) && mx - mn <= 1)) {
      ok = false;
      detail = "argmin structure broken at n=" + std::to_string(n);
    }
  }
  for (int n : {16, 64, 256, 1024}) {
    Graph g = complete_graph(n);
    double best = std::min(hP(g, equal_partition(n, 2)),
                           hP(g, equal_partition(n, 3)));
    double r = h1(g) - best;
    double theta = r / h1(g);
    if (!(r < std::log2(std::exp(1.0)) + 1e-6 &&
          theta < 1.45 / std::log2(static_cast<double>(n)))) {
      ok = false;
      detail = "bound broken at n=" + std::to_string(n);
    }
  }
  report(3, "complete graphs: 2-3 near-equal modules, R < log2 e", ok, detail);
}

// ---------------------------------------------------------------- 4
void binary_trees() {
  bool ok = true;
  std::string detail;
  double prev_theta = -1.0;
  for (int H = 8; H <= 14; ++H) {
    Graph g = complete_binary_tree(H);
    double n = g.num_vertices();
    if (!(h1(g) >= std::log2(n) - 1.0)) {
      ok = false;
      detail = "h1 floor broken at H=" + std::to_string(H);
    }
    int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(H)))) - 1;
    double hp = hP(g, tree_partition(H, k));
    if (!(hp <= std::log2(std::log2(n)) + 5.0)) {
      ok = false;
      detail = "hP cap broken at H=" + std::to_string(H);
    }
    double theta = (h1(g) - hp) / h1(g);
    if (theta <= prev_theta) {
      ok = false;
      detail = "theta not increasing at H=" + std::to_string(H);
    }
    prev_theta = theta;
  }
  report(4, "binary trees: entropy floor, construction cap, rising theta", ok,
         detail);
}

// ---------------------------------------------------------------- 5
void grids() {
  bool ok = true;
  std::string detail;
  for (int side : {16, 32, 64}) {
    Graph g = grid(side);
    double s = side;
    if (!(h1(g) >= std::log2(s * (s - 1.0)))) {
      ok = false;
      detail = "h1 floor broken at side=" + std::to_string(side);
    }
    int k = static_cast<int>(std::ceil(std::log2(s)));
    double hp = hP(g, grid_partition(side, k));
    double cap = 2.0 * std::log2(static_cast<double>(k)) +
                 (std::log2(s) + 1.0) / k + 0.5;
    if (!(hp <= cap)) {
      ok = false;
      detail = "hP cap broken at side=" + std::to_string(side);
    }
  }
  report(5, "grids: entropy floor and block-partition cap", ok, detail);
}

// ---------------------------------------------------------------- 6
// Exact finite-n certificate for d-regular graphs:
// (2/d)(1 - 1/l)((vol - d log2 n)/vol) log2((vol - d log2 n)/(d log2 n)).
double degree_certificate(int n, int d) {
  double log2n = std::log2(static_cast<double>(n));
  int l = std::max(
      1, static_cast<int>(std::floor(std::log(log2n) /
                                     std::log(static_cast<double>(d)))) -
             1);
  double vol = static_cast<double>(n) * d;
  double rem = vol - d * log2n;
  if (rem <= 0.0) return 0.0;
  return (2.0 / d) * (1.0 - 1.0 / l) * (rem / vol) *
         std::log2(rem / (d * log2n));
}

void bounded_degree() {
  bool ok = true;
  std::string detail;
  for (int n : {64, 256, 1024}) {
    Graph g = random_regular(n, 3, 4242);
    double certified = h1(g) - hP(g, spanning_tree_partition(g));
    double floor = degree_certificate(n, 3);
    if (!(certified >= floor - 1e-6)) {
      ok = false;
      detail = "certificate broken at n=" + std::to_string(n);
    }
  }
  report(6, "3-regular graphs: spanning-tree certificate meets proof floor",
         ok, detail);
}

// ---------------------------------------------------------------- 7
void merge_split() {
  std::mt19937_64 rng(707);
  int agree = 0, total = 0;
  for (int gi = 0; gi < 50; ++gi) {
    int n = 12 + 2 * (gi % 5);
    Graph g = random_regular(n, 4, 5000 + gi);
    double vol = g.volume();
    for (int si = 0; si < 20; ++si) {
      int sz = std::uniform_int_distribution<int>(2, n - 1)(rng);
      VertexSet all = g.all_vertices();
      std::shuffle(all.begin(), all.end(), rng);
      VertexSet x1(all.begin(), all.begin() + sz);
      int cutpoint = std::uniform_int_distribution<int>(1, sz - 1)(rng);
      VertexSet y1(x1.begin(), x1.begin() + cutpoint);
      VertexSet y2(x1.begin() + cutpoint, x1.end());
      std::vector<int> unsplit(n, 0), split(n, 0);
      for (int v : x1) unsplit[v] = 1;
      for (int v : y1) split[v] = 1;
      for (int v : y2) split[v] = 2;
      double diff = hP(g, Partition(split)) - hP(g, Partition(unsplit));
      auto c = merge_split_criterion(g, x1, y1, y2);
      double predicted = 2.0 * (c.lhs - c.rhs) / vol;
      ++total;
      bool tie = std::abs(diff) < 1e-9;
      bool ptie = std::abs(predicted) < 1e-9;
      bool ok = tie ? ptie : (!ptie && (diff > 0) == (predicted > 0));
      if (ok && std::abs(diff - predicted) < 1e-9) ++agree;
    }
  }
  report(7, "merge-split criterion matches direct comparison", agree == total,
         std::to_string(agree) + "/" + std::to_string(total));
}

// ---------------------------------------------------------------- 8
void volume_module_invariance() {
  std::mt19937_64 rng(808);
  ModuleFunction volf = ModuleFunction::volume_kind();
  int bad = 0;
  for (int gi = 0; gi < 20; ++gi) {
    int n = std::uniform_int_distribution<int>(3, 30)(rng);
    Graph g = random_connected_graph(n, 0.2, rng);
    double base = h1(g);
    for (int ti = 0; ti < 100; ++ti) {
      CodingTree t = CodingTree::random_binary(n, rng);
      if (std::abs(hT_with_module_function(g, t, volf) - base) >= 1e-9) ++bad;
    }
  }
  report(8, "volume module function is tree-invariant (2000 trees)", bad == 0,
         std::to_string(2000 - bad) + "/2000");
}

// ---------------------------------------------------------------- 9
struct SecurityTrial {
  int colors;
  int max_size;
  double theta;
};

SecurityTrial security_trial(int n, uint64_t seed) {
  SecurityModelParams params;
  params.n = n;
  params.a = 1.5;
  params.d = 4;
  params.rng_seed = seed;
  auto [g, trace] = security_model(params);
  Partition nat = natural_partition(trace);
  SecurityTrial t;
  t.colors = nat.module_count();
  t.max_size = 0;
  for (const VertexSet& m : nat.modules())
    t.max_size = std::max<int>(t.max_size, m.size());
  double base = h1(g);
  t.theta = (base - hP(g, nat)) / base;
  return t;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void security_model_checks() {
  const double a = 1.5;
  const int trials = 20;
  std::vector<double> med_theta;
  int colors_in_range = 0, size_ok = 0;
  for (int n : {2000, 8000, 20000}) {
    std::vector<double> thetas;
    for (int t = 0; t < trials; ++t) {
      SecurityTrial tr = security_trial(n, 900 + t);
      thetas.push_back(tr.theta);
      if (n == 20000) {
        double ln_n = std::log(static_cast<double>(n));
        double scale = n / std::pow(ln_n, a);
        if (tr.colors >= scale / 2.0 && tr.colors <= 2.0 * scale)
          ++colors_in_range;
        if (tr.max_size <= 4.0 * std::pow(ln_n, a + 1.0)) ++size_ok;
      }
    }
    med_theta.push_back(median(thetas));
  }
  bool ok = colors_in_range >= 18 && size_ok >= 18 &&
            med_theta[0] < med_theta[1] && med_theta[1] < med_theta[2] &&
            med_theta[2] >= 0.5;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "colors %d/20, max-size %d/20, median theta %.3f -> %.3f -> "
                "%.3f",
                colors_in_range, size_ok, med_theta[0], med_theta[1],
                med_theta[2]);
  report(9, "homophyly model: community counts, sizes, rising theta", ok,
         detail);
}

// ---------------------------------------------------------------- 10
void spectral_checks() {
  bool ok = true;
  std::string detail;
  int cheeger_pairs = 0;

  auto spectrum_of = [&](const Graph& g) {
    Spectrum s = eigenvalues(normalized_laplacian(g));
    double trace =
        std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
    if (std::abs(trace - g.num_vertices()) > g.num_vertices() * 1e-8) {
      ok = false;
      detail = "trace identity broken";
    }
    return s;
  };
  auto cheeger_pair = [&](const Graph& g, const Partition& p) {
    if (g.num_vertices() > 4096) return;  // beyond the dense eigensolver
    std::vector<VertexSet> mods;
    for (const VertexSet& m : p.modules())
      if (static_cast<int>(m.size()) < g.num_vertices()) mods.push_back(m);
    if (mods.empty()) return;
    Spectrum s = spectrum_of(g);
    auto kc = k_way_conductance_upper(g, mods);
    ++cheeger_pairs;
    if (!cheeger_lower_check(s, kc.k, kc.max_phi)) {
      ok = false;
      detail = "cheeger check failed at n=" + std::to_string(g.num_vertices());
    }
  };

  // closed forms
  Spectrum k4 = spectrum_of(complete_graph(4));
  for (int i = 0; i < 4; ++i)
    if (std::abs(k4.eigenvalues[i] - (i == 0 ? 0.0 : 4.0 / 3.0)) > 1e-8) {
      ok = false;
      detail = "K4 spectrum";
    }
  Spectrum c4 = spectrum_of(cycle(4));
  double want[] = {0.0, 1.0, 1.0, 2.0};
  for (int i = 0; i < 4; ++i)
    if (std::abs(c4.eigenvalues[i] - want[i]) > 1e-8) {
      ok = false;
      detail = "C4 spectrum";
    }

  // every (graph, modules) pair from the family suites, up to dense capacity
  for (int n : {16, 64, 256, 1024})
    cheeger_pair(complete_graph(n), equal_partition(n, 2));
  for (int H = 8; H <= 12; ++H) {
    int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(H)))) - 1;
    cheeger_pair(complete_binary_tree(H), tree_partition(H, k));
  }
  for (int side : {16, 32, 64}) {
    int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(side))));
    cheeger_pair(grid(side), grid_partition(side, k));
  }

  // one homophyly instance at n = 2000: census covers 90% of the colors
  {
    SecurityModelParams params;
    params.n = 2000;
    params.a = 1.5;
    params.d = 4;
    params.rng_seed = 1001;
    auto [g, trace] = security_model(params);
    Partition nat = natural_partition(trace);
    cheeger_pair(g, nat);
    Spectrum s = spectrum_of(g);
    auto kc = k_way_conductance_upper(g, nat.modules());
    int census = small_eigenvalue_census(s, 2.0 * kc.max_phi);
    if (census < static_cast<int>(0.9 * nat.module_count())) {
      ok = false;
      detail = "eigenvalue census below 90% of color count";
    }
  }

  report(10, "spectra: closed forms, trace identity, cheeger consistency", ok,
         detail.empty() ? std::to_string(cheeger_pairs) + " cheeger pairs"
                        : detail);
}

// ---------------------------------------------------------------- 11
void determinism() {
  std::string cmd = std::string(SENET_CLI_PATH) +
                    " experiment --family security --sizes 2000 --trials 3 "
                    "--seed 5 --a 1.5 --d 4 2>&1";
  auto run = [&]() {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  std::string a = run(), b = run();
  report(11, "experiment CSV is byte-identical across reruns",
         !a.empty() && a == b);
}

}  // namespace

int main() {
  resistance_law_identity();
  exact_h2_oracle_crosscheck();
  complete_graphs();
  binary_trees();
  grids();
  bounded_degree();
  merge_split();
  volume_module_invariance();
  security_model_checks();
  spectral_checks();
  determinism();
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
