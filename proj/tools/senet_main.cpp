#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "json.hpp"
#include "senet/coding_tree.hpp"
#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/graph_io.hpp"
#include "senet/partition_search.hpp"
#include "senet/spectral.hpp"

namespace {

using nlohmann::json;
using namespace senet;

// exit codes: 0 ok, 1 internal, 2 parse/usage, 3 disconnected graph,
// 4 capacity exceeded
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitCapacity = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }
}

int cmd_analyze(const std::string& graph_path, const std::string& mode,
                const std::string& partition_path, const std::string& out_path) {
  Graph g = read_edge_list_file(graph_path);
  if (!g.is_connected()) throw DomainError("graph is not connected");
  EntropyReport report;
  if (mode == "exact") {
    report = resistance(g, H2Mode::exact);
  } else if (mode == "greedy") {
    report = resistance(g, H2Mode::greedy);
  } else if (mode == "construction") {
    if (partition_path.empty())
      throw InputError("construction mode requires --partition");
    Partition p = read_partition_file(partition_path, g.num_vertices());
    report = resistance(g, H2Mode::construction, &p);
  } else {
    throw InputError("unknown mode: " + mode);
  }
  emit(report.to_json(), out_path);
  return 0;
}

int cmd_generate(const std::string& family, int n, int depth, int side, int d,
                 double a, int n0, uint64_t seed, const std::string& out_path,
                 const std::string& trace_path) {
  std::optional<Graph> g;
  if (family == "tree") {
    g = complete_binary_tree(depth);
  } else if (family == "grid") {
    g = grid(side);
  } else if (family == "complete") {
    g = complete_graph(n);
  } else if (family == "cycle") {
    g = cycle(n);
  } else if (family == "path") {
    g = path(n);
  } else if (family == "regular") {
    g = random_regular(n, d, seed);
  } else if (family == "security") {
    SecurityModelParams params;
    params.n = n;
    params.a = a;
    params.d = d;
    params.n0 = n0;
    params.rng_seed = seed;
    auto [graph, trace] = security_model(params);
    g = std::move(graph);
    if (!trace_path.empty()) {
      json j;
      j["colors"] = trace.colors;
      j["seed_flags"] = trace.seed_flags;
      j["seed_vertex"] = trace.seed_vertex;
      j["seed_birth"] = trace.seed_birth;
      j["seed_count_at"] = trace.seed_count_at;
      j["edge_shortfall"] = trace.edge_shortfall;
      emit(j.dump(), trace_path);
    }
  } else {
    throw InputError("unknown family: " + family);
  }
  std::ostringstream os;
  write_edge_list(os, *g);
  emit(os.str(), out_path);
  return 0;
}

int cmd_spectrum(const std::string& graph_path,
                 const std::string& partition_path, double threshold,
                 bool threshold_set, const std::string& out_path) {
  Graph g = read_edge_list_file(graph_path);
  Spectrum s = eigenvalues(normalized_laplacian(g));
  json j;
  j["eigenvalues"] = s.eigenvalues;
  j["residual"] = s.residual;
  double census_threshold = threshold;
  if (!partition_path.empty()) {
    Partition p = read_partition_file(partition_path, g.num_vertices());
    std::vector<VertexSet> mods;
    for (const VertexSet& m : p.modules())
      if (static_cast<int>(m.size()) < g.num_vertices()) mods.push_back(m);
    if (!mods.empty()) {
      auto kc = k_way_conductance_upper(g, mods);
      json c;
      c["k"] = kc.k;
      c["max_phi"] = kc.max_phi;
      c["lambda_k_half"] = s.eigenvalues[kc.k - 1] / 2.0;
      c["pass"] = cheeger_lower_check(s, kc.k, kc.max_phi);
      j["cheeger_check"] = c;
      if (!threshold_set) census_threshold = 2.0 * kc.max_phi;
    }
  }
  json c;
  c["threshold"] = census_threshold;
  c["count"] = small_eigenvalue_census(s, census_threshold);
  j["census"] = c;
  emit(j.dump(), out_path);
  return 0;
}

int cmd_experiment(const senet::tools::ExperimentSpec& spec,
                   const std::string& out_path) {
  emit(senet::tools::run_experiment(spec), out_path);
  return 0;
}

int cmd_verify(const std::string& suite) {
  auto results = senet::tools::run_verify_suites(suite);
  bool failed = false;
  for (const auto& r : results) {
    if (r.failures == 0) {
      std::printf("%s: PASS (%d checks)\n", r.name.c_str(), r.checks);
    } else {
      std::printf("%s: FAIL (%d/%d failed)\n", r.name.c_str(), r.failures,
                  r.checks);
      failed = true;
    }
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure entropy, resistance and security-index toolkit"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "entropy report for a graph");
  std::string an_graph, an_mode = "greedy", an_partition, an_out;
  analyze->add_option("--graph", an_graph, "edge-list file")->required();
  analyze->add_option("--mode", an_mode, "exact|greedy|construction");
  analyze->add_option("--partition", an_partition,
                      "witness partition file (construction mode)");
  analyze->add_option("--out", an_out, "output file (default stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "graph family generators");
  std::string ge_family, ge_out, ge_trace;
  int ge_n = 0, ge_depth = 0, ge_side = 0, ge_d = 3, ge_n0 = 0;
  double ge_a = 1.5;
  uint64_t ge_seed = 0;
  generate
      ->add_option("--family", ge_family,
                   "tree|grid|complete|cycle|path|regular|security")
      ->required();
  generate->add_option("--n", ge_n, "vertex count");
  generate->add_option("--depth", ge_depth, "tree depth");
  generate->add_option("--side", ge_side, "grid side");
  generate->add_option("--d", ge_d, "degree parameter");
  generate->add_option("--a", ge_a, "security-model exponent");
  generate->add_option("--n0", ge_n0, "security-model seed-graph size");
  generate->add_option("--seed", ge_seed, "RNG seed");
  generate->add_option("--out", ge_out, "edge-list output (default stdout)");
  generate->add_option("--trace", ge_trace, "security-model trace JSON output");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "normalized Laplacian checks");
  std::string sp_graph, sp_partition, sp_out;
  double sp_threshold = 0.5;
  spectrum->add_option("--graph", sp_graph, "edge-list file")->required();
  spectrum->add_option("--partition", sp_partition, "module partition file");
  auto* thr_opt =
      spectrum->add_option("--threshold", sp_threshold,
                           "eigenvalue census threshold (default 2*max_phi "
                           "when a partition is given, else 0.5)");
  spectrum->add_option("--out", sp_out, "output file (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "theorem-scale CSV runs");
  senet::tools::ExperimentSpec spec;
  std::string ex_out;
  experiment
      ->add_option("--family", spec.family,
                   "tree|grid|complete|bounded-degree|security|spectral")
      ->required();
  experiment->add_option("--sizes", spec.sizes, "size list")
      ->required()
      ->delimiter(',');
  experiment->add_option("--trials", spec.trials, "trials per size");
  experiment->add_option("--seed", spec.rng_seed, "base RNG seed");
  experiment->add_option("--a", spec.a, "security-model exponent");
  experiment->add_option("--d", spec.d, "degree parameter");
  experiment->add_option("--out", ex_out, "CSV output (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "property suites");
  std::string ve_suite;
  verify->add_option("--suite", ve_suite,
                     "resistance-law|merge-split|cheeger|volume-invariance "
                     "(default all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(an_graph, an_mode, an_partition, an_out);
    if (*generate)
      return cmd_generate(ge_family, ge_n, ge_depth, ge_side, ge_d, ge_a,
                          ge_n0, ge_seed, ge_out, ge_trace);
    if (*spectrum)
      return cmd_spectrum(sp_graph, sp_partition, sp_threshold,
                          thr_opt->count() > 0, sp_out);
    if (*experiment) return cmd_experiment(spec, ex_out);
    if (*verify) return cmd_verify(ve_suite);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDisconnected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
