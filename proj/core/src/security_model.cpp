#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "senet/generators.hpp"

namespace senet {

namespace {

inline double seed_probability(long step, double a) {
  if (a == 0.0) return 1.0;
  double li = std::log(static_cast<double>(step));
  if (li <= 1.0) return 1.0;  // clamp while (ln i)^a < 1
  return std::min(1.0, std::pow(li, -a));
}

}  // namespace

std::pair<Graph, GenerationTrace> security_model(const SecurityModelParams& params) {
  int d = params.d;
  if (d < 2) throw InputError("security_model requires d >= 2");
  if (params.a < 0.0) throw InputError("security_model requires a >= 0");
  int n0 = params.n0 > 0 ? params.n0 : d + 1;
  if (n0 < 2) throw InputError("security_model requires n0 >= 2");
  int n = params.n;
  if (n <= n0) throw InputError("security_model requires n > n0");

  std::mt19937_64 rng(params.rng_seed);
  GenerationTrace trace;
  trace.colors.resize(n);
  trace.seed_flags.assign(n, 0);
  trace.seed_count_at.resize(n);

  std::vector<Edge> edges;
  std::vector<long long> degree(n, 0);
  std::vector<int> pa_pool;  // vertex ids with multiplicity = degree
  std::vector<int> seeds;
  std::vector<std::vector<int>> color_members;
  std::vector<long long> color_degree;

  auto push_edge = [&](int u, int v) {
    edges.push_back({u, v, 1.0});
    ++degree[u];
    ++degree[v];
    pa_pool.push_back(u);
    pa_pool.push_back(v);
    ++color_degree[trace.colors[u]];
    ++color_degree[trace.colors[v]];
  };

  // seed graph: complete graph on n0 distinct-color seeds
  for (int v = 0; v < n0; ++v) {
    trace.colors[v] = v;
    trace.seed_flags[v] = 1;
    seeds.push_back(v);
    color_members.push_back({v});
    color_degree.push_back(0);
    trace.seed_vertex.push_back(v);
    trace.seed_birth.push_back(v + 1);
  }
  for (int u = 0; u < n0; ++u)
    for (int v = u + 1; v < n0; ++v) push_edge(u, v);
  for (int t = 0; t < n0; ++t) trace.seed_count_at[t] = std::min(t + 1, n0);

  const int retry_budget = 100;
  for (int v = n0; v < n; ++v) {
    long step = v + 1;
    double p = seed_probability(step, params.a);
    bool is_seed = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    std::vector<int> targets;
    if (is_seed) {
      int color = static_cast<int>(color_members.size());
      trace.colors[v] = color;
      trace.seed_flags[v] = 1;
      color_members.push_back({});
      color_degree.push_back(0);
      trace.seed_vertex.push_back(v);
      trace.seed_birth.push_back(v + 1);
      // one preferential-attachment edge over all existing vertices
      {
        size_t idx = std::uniform_int_distribution<size_t>(0, pa_pool.size() - 1)(rng);
        targets.push_back(pa_pool[idx]);
      }
      // d-1 edges to uniformly random distinct seed vertices
      for (int k = 0; k < d - 1; ++k) {
        bool placed = false;
        for (int tries = 0; tries < retry_budget; ++tries) {
          size_t idx = std::uniform_int_distribution<size_t>(0, seeds.size() - 1)(rng);
          int u = seeds[idx];
          if (std::find(targets.begin(), targets.end(), u) == targets.end()) {
            targets.push_back(u);
            placed = true;
            break;
          }
        }
        if (!placed) ++trace.edge_shortfall;
      }
      seeds.push_back(v);
    } else {
      // join a uniformly random old color; d preferential edges inside it
      int color = std::uniform_int_distribution<int>(
          0, static_cast<int>(color_members.size()) - 1)(rng);
      trace.colors[v] = color;
      const std::vector<int>& members = color_members[color];
      int want = std::min<int>(d, static_cast<int>(members.size()));
      if (want < d) trace.edge_shortfall += d - want;
      for (int k = 0; k < want; ++k) {
        bool placed = false;
        for (int tries = 0; tries < retry_budget; ++tries) {
          long long r = std::uniform_int_distribution<long long>(
              0, color_degree[color] - 1)(rng);
          int u = -1;
          for (int mv : members) {
            r -= degree[mv];
            if (r < 0) {
              u = mv;
              break;
            }
          }
          if (u < 0) u = members.back();
          if (std::find(targets.begin(), targets.end(), u) == targets.end()) {
            targets.push_back(u);
            placed = true;
            break;
          }
        }
        if (!placed) ++trace.edge_shortfall;
      }
    }
    for (int u : targets) push_edge(v, u);
    color_members[trace.colors[v]].push_back(v);
    trace.seed_count_at[v] = static_cast<int>(seeds.size());
  }

  Graph g(n, std::move(edges));
  return {std::move(g), std::move(trace)};
}

Partition natural_partition(const GenerationTrace& trace) {
  return Partition(trace.colors);
}

TraceStatistics trace_statistics(const GenerationTrace& trace, const Graph& g,
                                 double a, double b) {
  int n = g.num_vertices();
  int colors = static_cast<int>(trace.seed_vertex.size());
  TraceStatistics s;
  s.color_count = colors;
  std::vector<int> size(colors, 0);
  std::vector<double> global_w(colors, 0.0);
  for (int v = 0; v < n; ++v) ++size[trace.colors[v]];
  for (const Edge& e : g.edges()) {
    int cu = trace.colors[e.u], cv = trace.colors[e.v];
    if (cu != cv) {
      global_w[cu] += e.w;
      global_w[cv] += e.w;
    }
  }
  double ln_n = std::log(static_cast<double>(n));
  double lnln = std::log(ln_n);
  s.max_community_size = 0;
  s.communities.reserve(colors);
  for (int c = 0; c < colors; ++c) {
    CommunityStat cs;
    cs.color = c;
    cs.size = size[c];
    cs.birth_step = trace.seed_birth[c];
    cs.global_edges = global_w[c];
    double lts = std::log(static_cast<double>(cs.birth_step));
    cs.size_prediction =
        std::pow(ln_n, a + 1.0) - (lts > 0.0 ? std::pow(lts, a + 1.0) : 0.0);
    s.communities.push_back(cs);
    s.max_community_size = std::max(s.max_community_size, cs.size);
  }
  double t2 = n / std::pow(ln_n, b);
  s.late_mean_global_edges = 0.0;
  s.late_community_count = 0;
  for (const CommunityStat& cs : s.communities)
    if (cs.birth_step >= t2) {
      s.late_mean_global_edges += cs.global_edges;
      ++s.late_community_count;
    }
  if (s.late_community_count > 0) s.late_mean_global_edges /= s.late_community_count;
  if (a > 1.0)
    s.global_edge_cap = 2.5 * (a + 1.0) * b * b * lnln * lnln;
  else if (a == 1.0)
    s.global_edge_cap = 8.0 * b * b * lnln * lnln;
  else
    s.global_edge_cap = 5.0 * b * b * lnln * lnln;
  return s;
}

}  // namespace senet
