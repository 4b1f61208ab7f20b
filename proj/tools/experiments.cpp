#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "senet/coding_tree.hpp"
#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/partition_search.hpp"
#include "senet/spectral.hpp"

namespace senet::tools {

namespace {

int worker_count() {
  if (const char* env = std::getenv("SENET_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

struct Row {
  std::string family;
  int n = 0;
  double param = 0.0;
  double h1 = 0.0, h2 = 0.0, resistance = 0.0, security_index = 0.0;
  double bound = 0.0;
  bool bound_satisfied = false;
  uint64_t seed = 0;

  std::string csv() const {
    std::ostringstream os;
    os << family << ',' << n << ',' << fmt(param) << ',' << fmt(h1) << ','
       << fmt(h2) << ',' << fmt(resistance) << ',' << fmt(security_index)
       << ',' << fmt(bound) << ',' << (bound_satisfied ? 1 : 0) << ',' << seed;
    return os.str();
  }
};

Row report_row(const std::string& family, const Graph& g,
               const Partition& witness, double param, uint64_t seed) {
  EntropyReport r = make_report(g, witness, "construction");
  Row row;
  row.family = family;
  row.n = r.n;
  row.param = param;
  row.h1 = r.h1;
  row.h2 = r.h2;
  row.resistance = r.resistance;
  row.security_index = r.security_index;
  row.seed = seed;
  return row;
}

Row tree_row(int depth) {
  Graph g = complete_binary_tree(depth);
  int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(depth)))) - 1;
  k = std::max(1, std::min(k, depth - 1));
  Row row = report_row("tree", g, tree_partition(depth, k), depth, 0);
  double n = g.num_vertices();
  row.bound = std::log2(std::log2(n)) + 5.0;
  row.bound_satisfied = row.h2 <= row.bound;
  return row;
}

Row grid_row(int side) {
  Graph g = grid(side);
  int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(side))));
  Row row = report_row("grid", g, grid_partition(side, k), side, 0);
  row.bound = 2.0 * std::log2(static_cast<double>(k)) +
              (std::log2(static_cast<double>(side)) + 1.0) / k + 0.5;
  row.bound_satisfied = row.h2 <= row.bound;
  return row;
}

Row complete_row(int n) {
  Graph g = complete_graph(n);
  int best_l = 2;
  double best = hP(g, equal_partition(n, 2));
  for (int l : {3}) {
    if (l >= n) continue;
    double h = hP(g, equal_partition(n, l));
    if (h < best) {
      best = h;
      best_l = l;
    }
  }
  Row row = report_row("complete", g, equal_partition(n, best_l), best_l, 0);
  row.bound = std::log2(std::exp(1.0));
  row.bound_satisfied = row.resistance < row.bound + 1e-6;
  return row;
}

// The proof's finite-n resistance certificate for d-regular graphs:
// (2/d)(1 - 1/l) * ((vol - d log2 n)/vol) * log2((vol - d log2 n)/(d log2 n))
// with l = max(1, floor(log_d log2 n) - 1).
double bounded_degree_bound(int n, int d) {
  double log2n = std::log2(static_cast<double>(n));
  int l = std::max(
      1, static_cast<int>(std::floor(std::log(log2n) /
                                     std::log(static_cast<double>(d)))) -
             1);
  double vol = static_cast<double>(n) * d;
  double rem = vol - d * log2n;
  if (rem <= 0.0 || rem <= d * log2n) return 0.0;
  return (2.0 / d) * (1.0 - 1.0 / l) * (rem / vol) *
         std::log2(rem / (d * log2n));
}

Row bounded_degree_row(int n, int d, uint64_t seed) {
  Graph g = random_regular(n, d, seed);
  Row row = report_row("bounded-degree", g, spanning_tree_partition(g), d, seed);
  row.bound = bounded_degree_bound(n, d);
  row.bound_satisfied = row.resistance >= row.bound - 1e-6;
  return row;
}

Row security_row(int n, double a, int d, uint64_t seed) {
  SecurityModelParams params;
  params.n = n;
  params.a = a;
  params.d = d;
  params.rng_seed = seed;
  auto [g, trace] = security_model(params);
  Row row = report_row("security", g, natural_partition(trace), a, seed);
  // calibrated security-index floor, meaningful at the largest sizes
  row.bound = 0.5;
  row.bound_satisfied = row.security_index >= row.bound;
  return row;
}

Row spectral_row(int side) {
  Graph g = grid(side);
  int k = static_cast<int>(std::ceil(std::log2(static_cast<double>(side))));
  Partition p = grid_partition(side, k);
  Row row = report_row("spectral", g, p, p.module_count(), 0);
  Spectrum s = eigenvalues(normalized_laplacian(g));
  auto kc = k_way_conductance_upper(g, p.modules());
  row.bound = kc.max_phi;  // Cheeger: lambda_k / 2 <= phi(k) <= max_phi
  row.bound_satisfied = cheeger_lower_check(s, kc.k, kc.max_phi);
  return row;
}

}  // namespace

std::string run_experiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw InputError("experiment: trials must be >= 1");
  for (int s : spec.sizes)
    if (s <= 0) throw InputError("experiment: sizes must be positive");

  bool stochastic =
      spec.family == "bounded-degree" || spec.family == "security";
  std::vector<std::pair<int, uint64_t>> jobs;  // (size, per-trial seed)
  for (int s : spec.sizes) {
    if (stochastic)
      for (int t = 0; t < spec.trials; ++t)
        jobs.emplace_back(s, spec.rng_seed + static_cast<uint64_t>(t));
    else
      jobs.emplace_back(s, spec.rng_seed);
  }

  std::vector<Row> rows(jobs.size());
  auto run_job = [&](size_t i) {
    auto [size, seed] = jobs[i];
    if (spec.family == "tree")
      rows[i] = tree_row(size);
    else if (spec.family == "grid")
      rows[i] = grid_row(size);
    else if (spec.family == "complete")
      rows[i] = complete_row(size);
    else if (spec.family == "bounded-degree")
      rows[i] = bounded_degree_row(size, spec.d, seed);
    else if (spec.family == "security")
      rows[i] = security_row(size, spec.a, spec.d, seed);
    else if (spec.family == "spectral")
      rows[i] = spectral_row(size);
    else
      throw InputError("experiment: unknown family " + spec.family);
  };

  int workers = std::min<int>(worker_count(), static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < jobs.size(); i += workers) {
          try {
            run_job(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  std::ostringstream out;
  out << "family,n,param,h1,h2,resistance,security_index,bound,"
         "bound_satisfied,seed\n";
  for (const Row& r : rows) out << r.csv() << '\n';
  return out.str();
}

}  // namespace senet::tools
