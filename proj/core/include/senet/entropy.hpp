#ifndef SENET_ENTROPY_HPP
#define SENET_ENTROPY_HPP

#include <optional>
#include <string>
#include <vector>

#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

/// All entropies are in bits (log base 2), with the convention 0*log2(0) = 0.

/// One-dimensional structure entropy: Shannon entropy of the stationary
/// degree distribution, -sum_i (d_i/vol) log2(d_i/vol).
double h1(const Graph& g);

/// Structure entropy of g by partition p: intra-module degree entropy plus
/// module-boundary term.
double hP(const Graph& g, const Partition& p);

/// Same evaluation over a raw assignment vector (module ids in
/// [0, module_count)). hP(g, p) == hP_assignment(g, p.assignment(), L)
/// bit-for-bit; partition enumerators use this directly.
double hP_assignment(const Graph& g, const std::vector<int>& assign,
                     int module_count);

/// -sum_j ((V_j - g_j)/vol) log2(V_j/vol). Equals h1 - hP (local
/// resistance law).
double resistance_of_partition(const Graph& g, const Partition& p);

struct ModuleRow {
  double entropy;      // H_j, degree entropy inside the module
  double conductance;  // Phi(X_j); NaN for the full-set module
  double volume;       // V_j
  double boundary;     // g_j
};

struct HPDecomposition {
  double intra;     // volume-weighted sum of the H_j
  double boundary;  // -sum_j (g_j/vol) log2(V_j/vol)
  std::vector<ModuleRow> per_module;
  bool phi_form_valid;  // every V_j <= m, hypothesis of the Phi-form
};

HPDecomposition decompose_hP(const Graph& g, const Partition& p);

/// theta = (h1 - h2)/h1 = 1 - h2/h1. Requires 0 < h2 <= h1.
double security_index(double h1_bits, double h2_bits);

/// (n, theta)-resistor graph test: security index >= theta, theta in (0,1).
bool is_resistor_graph(double security_index_value, double theta);

struct H1Bound {
  double bound;
  bool satisfied;
  double epsilon;  // smallest eps with weight ratio <= m^eps (0 when unit)
};

/// Lower bound on h1: (log2 m - 1)/2 for unit weights, and
/// ((1-eps) log2 m - 1)/2 for weighted graphs with ratio W <= m^eps.
H1Bound h1_lower_bound_check(const Graph& g);

struct EntropyReport {
  int n = 0;
  int m = 0;
  double h1 = 0.0;
  double h2 = 0.0;
  double resistance = 0.0;
  double security_index = 0.0;
  std::string method;  // "exact", "greedy", or a construction name
  std::optional<Partition> witness;

  /// Flat JSON object: n, m, h1, h2, resistance, security_index, method,
  /// partition (array of module arrays).
  std::string to_json() const;
};

EntropyReport make_report(const Graph& g, const Partition& witness,
                          const std::string& method);

}  // namespace senet

#endif
