#ifndef SENET_SPECTRAL_HPP
#define SENET_SPECTRAL_HPP

#include <vector>

#include "senet/graph.hpp"
#include "senet/partition.hpp"

namespace senet {

/// Dense symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // n*n entries

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // sorted ascending
  double residual = 0.0;            // max_i ||L v_i - lambda_i v_i||_inf
};

/// L = I - D^{-1/2} A D^{-1/2}. Requires every vertex to have positive degree.
SymMatrix normalized_laplacian(const Graph& g);

/// Full symmetric eigen-decomposition, eigenvalues ascending. Cyclic Jacobi
/// for small matrices, LAPACK dsyevd above `jacobi_limit`; both paths report
/// the exact residual max |L v - lambda v|. n > dense_limit is a capacity
/// error.
Spectrum eigenvalues(const SymMatrix& L, int dense_limit = 4096);

struct KWayConductance {
  int k = 0;
  double max_phi = 0.0;
};

/// Upper bound on the k-way conductance phi(k) from an explicit family of
/// pairwise disjoint non-empty vertex sets: returns (k, max over the family
/// of Phi(S_i)).
KWayConductance k_way_conductance_upper(const Graph& g,
                                        const std::vector<VertexSet>& modules);

/// High-order Cheeger lower direction: lambda_k / 2 <= phi(k) <= max_phi, so
/// lambda_k / 2 <= max_phi + 1e-8 must hold; false indicates a bug somewhere
/// in the pipeline.
bool cheeger_lower_check(const Spectrum& s, int k, double max_phi);

/// Number of eigenvalues <= threshold.
int small_eigenvalue_census(const Spectrum& s, double threshold);

struct CensusModule {
  int module = 0;
  int size = 0;
  double volume = 0.0;
  double phi = 0.0;  // NaN when conductance is undefined (module = V)
  bool qualifies = false;
};

struct CensusReport {
  double eps = 0.0;
  double phi_cap = 0.0;
  double size_cap = 0.0;
  int qualified_count = 0;
  double qualified_volume = 0.0;
  double volume_fraction = 0.0;  // qualified volume / vol(G)
  std::vector<CensusModule> modules;
};

/// Classifies each module of p by (Phi <= phi_cap, |X| <= size_cap) and
/// reports the volume fraction covered by modules passing both. Measurement
/// only; no assertion.
CensusReport combinatorial_census(const Graph& g, const Partition& p, double eps,
                                  double phi_cap, double size_cap);

}  // namespace senet

#endif
