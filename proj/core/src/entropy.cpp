#include "senet/entropy.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace senet {

namespace {

// x * log2(x/y) with the 0*log2(0) = 0 convention.
inline double xlog2(double x, double y) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x / y);
}

struct ModuleStats {
  std::vector<double> vol;       // V_j
  std::vector<double> boundary;  // g_j
};

ModuleStats module_stats(const Graph& g, const Partition& p) {
  if (p.size() != g.num_vertices())
    throw InputError("partition size does not match graph");
  ModuleStats s;
  s.vol.assign(p.module_count(), 0.0);
  s.boundary.assign(p.module_count(), 0.0);
  for (int v = 0; v < g.num_vertices(); ++v)
    s.vol[p.module_of(v)] += g.degree(v);
  for (const Edge& e : g.edges()) {
    int a = p.module_of(e.u), b = p.module_of(e.v);
    if (a != b) {
      s.boundary[a] += e.w;
      s.boundary[b] += e.w;
    }
  }
  return s;
}

}  // namespace

double h1(const Graph& g) {
  if (g.num_vertices() == 0 || g.volume() <= 0.0)
    throw DomainError("h1 of an empty graph");
  double vol = g.volume();
  double h = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v) h -= xlog2(g.degree(v), vol);
  return h / vol;
}

double hP_assignment(const Graph& g, const std::vector<int>& assign,
                     int module_count) {
  if (static_cast<int>(assign.size()) != g.num_vertices())
    throw InputError("partition size does not match graph");
  double vol = g.volume();
  std::vector<double> mvol(module_count, 0.0), mcut(module_count, 0.0);
  for (int v = 0; v < g.num_vertices(); ++v) mvol[assign[v]] += g.degree(v);
  for (const Edge& e : g.edges()) {
    int a = assign[e.u], b = assign[e.v];
    if (a != b) {
      mcut[a] += e.w;
      mcut[b] += e.w;
    }
  }
  double h = 0.0;
  // intra term: -sum_v (d_v/vol) log2(d_v/V_{mod(v)})
  for (int v = 0; v < g.num_vertices(); ++v)
    h -= xlog2(g.degree(v), mvol[assign[v]]);
  // boundary term: -sum_j (g_j/vol) log2(V_j/vol)
  for (int j = 0; j < module_count; ++j)
    if (mcut[j] > 0.0) h -= mcut[j] * std::log2(mvol[j] / vol);
  return h / vol;
}

double hP(const Graph& g, const Partition& p) {
  return hP_assignment(g, p.assignment(), p.module_count());
}

double resistance_of_partition(const Graph& g, const Partition& p) {
  ModuleStats s = module_stats(g, p);
  double vol = g.volume();
  double r = 0.0;
  for (int j = 0; j < p.module_count(); ++j)
    r -= (s.vol[j] - s.boundary[j]) / vol * std::log2(s.vol[j] / vol);
  return r;
}

HPDecomposition decompose_hP(const Graph& g, const Partition& p) {
  ModuleStats s = module_stats(g, p);
  double vol = g.volume();
  double m = g.total_weight();
  HPDecomposition d;
  d.per_module.resize(p.module_count());
  std::vector<double> hj(p.module_count(), 0.0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int j = p.module_of(v);
    hj[j] -= xlog2(g.degree(v), s.vol[j]);
  }
  d.intra = 0.0;
  d.boundary = 0.0;
  d.phi_form_valid = true;
  for (int j = 0; j < p.module_count(); ++j) {
    double Hj = s.vol[j] > 0.0 ? hj[j] / s.vol[j] : 0.0;
    double phi = std::numeric_limits<double>::quiet_NaN();
    if (p.module_count() > 1) {
      double denom = std::min(s.vol[j], vol - s.vol[j]);
      if (denom > 0.0) phi = s.boundary[j] / denom;
    }
    d.per_module[j] = {Hj, phi, s.vol[j], s.boundary[j]};
    d.intra += s.vol[j] / vol * Hj;
    d.boundary -= s.boundary[j] / vol * std::log2(s.vol[j] / vol);
    if (s.vol[j] > m) d.phi_form_valid = false;
  }
  return d;
}

double security_index(double h1_bits, double h2_bits) {
  if (h1_bits <= 0.0) throw DomainError("security_index requires h1 > 0");
  if (h2_bits <= 0.0) throw DomainError("security_index requires h2 > 0");
  if (h2_bits > h1_bits)
    throw InputError("security_index: h2 > h1 violates H2 <= H1");
  return (h1_bits - h2_bits) / h1_bits;
}

bool is_resistor_graph(double security_index_value, double theta) {
  if (!(theta > 0.0 && theta < 1.0))
    throw InputError("resistor threshold must lie in (0,1)");
  return security_index_value >= theta;
}

H1Bound h1_lower_bound_check(const Graph& g) {
  double m = static_cast<double>(g.num_edges());
  double w = g.weight_ratio();
  H1Bound b;
  if (g.unit_weights() || w == 1.0) {
    b.epsilon = 0.0;
    b.bound = 0.5 * (std::log2(m) - 1.0);
  } else {
    // smallest eps with W <= m^eps
    b.epsilon = m > 1.0 ? std::log(w) / std::log(m) : 1.0;
    b.bound = 0.5 * ((1.0 - b.epsilon) * std::log2(m) - 1.0);
  }
  b.satisfied = h1(g) >= b.bound - 1e-9;
  return b;
}

EntropyReport make_report(const Graph& g, const Partition& witness,
                          const std::string& method) {
  EntropyReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.h1 = h1(g);
  r.h2 = hP(g, witness);
  r.resistance = r.h1 - r.h2;
  r.security_index = r.h1 > 0.0 ? r.resistance / r.h1 : 0.0;
  r.method = method;
  r.witness = witness;
  return r;
}

std::string EntropyReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["m"] = m;
  j["h1"] = h1;
  j["h2"] = h2;
  j["resistance"] = resistance;
  j["security_index"] = security_index;
  j["method"] = method;
  j["partition"] = nlohmann::json::array();
  if (witness) {
    for (const VertexSet& mod : witness->modules()) j["partition"].push_back(mod);
  }
  return j.dump();
}

}  // namespace senet
