#include "senet/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

extern "C" void dgemm_(const char* transa, const char* transb, const int* m,
                       const int* n, const int* k, const double* alpha,
                       const double* a, const int* lda, const double* b,
                       const int* ldb, const double* beta, double* c,
                       const int* ldc);

namespace senet {

namespace {

constexpr int kJacobiLimit = 512;

// Residual max_i ||L v_i - lambda_i v_i||_inf with eigenvectors as columns
// of V (row-major n x n).
double eigen_residual(const SymMatrix& L, const std::vector<double>& V,
                      const std::vector<double>& lambda) {
  int n = L.n;
  std::vector<double> LV(static_cast<size_t>(n) * n, 0.0);
  // Row-major C = A*B equals column-major C^T = B^T A^T; both A and B^T ==
  // interpretations line up if we ask BLAS for column-major V^T * L^T, i.e.
  // pass the row-major buffers straight through with swapped operand order.
  double one = 1.0, zero = 0.0;
  dgemm_("N", "N", &n, &n, &n, &one, V.data(), &n, L.a.data(), &n, &zero,
         LV.data(), &n);
  // LV now holds (L * V) in row-major layout.
  double res = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double r = LV[static_cast<size_t>(i) * n + j] -
                 lambda[j] * V[static_cast<size_t>(i) * n + j];
      res = std::max(res, std::abs(r));
    }
  return res;
}

// Cyclic-by-row Jacobi with eigenvector accumulation. Converges when the
// off-diagonal Frobenius norm drops below 1e-10; capped at 100 sweeps.
void jacobi_eigen(SymMatrix A, std::vector<double>& lambda,
                  std::vector<double>& V) {
  int n = A.n;
  V.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) V[static_cast<size_t>(i) * n + i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * A.at(i, j) * A.at(i, j);
    if (std::sqrt(off) < 1e-10) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = A.at(p, q);
        if (apq == 0.0) continue;
        double theta = (A.at(q, q) - A.at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = A.at(i, p), aiq = A.at(i, q);
          A.at(i, p) = c * aip - s * aiq;
          A.at(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = A.at(p, i), aqi = A.at(q, i);
          A.at(p, i) = c * api - s * aqi;
          A.at(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          double vip = V[static_cast<size_t>(i) * n + p];
          double viq = V[static_cast<size_t>(i) * n + q];
          V[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
          V[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
        }
      }
  }
  lambda.resize(n);
  for (int i = 0; i < n; ++i) lambda[i] = A.at(i, i);
  // sort ascending, permuting eigenvector columns alongside
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return lambda[a] < lambda[b]; });
  std::vector<double> l2(n);
  std::vector<double> V2(V.size());
  for (int j = 0; j < n; ++j) {
    l2[j] = lambda[idx[j]];
    for (int i = 0; i < n; ++i)
      V2[static_cast<size_t>(i) * n + j] = V[static_cast<size_t>(i) * n + idx[j]];
  }
  lambda = std::move(l2);
  V = std::move(V2);
}

}  // namespace

SymMatrix normalized_laplacian(const Graph& g) {
  int n = g.num_vertices();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) <= 0.0)
      throw DomainError("normalized_laplacian: isolated vertex " +
                        std::to_string(v));
  SymMatrix L;
  L.n = n;
  L.a.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) L.at(i, i) = 1.0;
  for (const Edge& e : g.edges()) {
    double x = e.w / std::sqrt(g.degree(e.u) * g.degree(e.v));
    L.at(e.u, e.v) -= x;
    L.at(e.v, e.u) -= x;
  }
  return L;
}

Spectrum eigenvalues(const SymMatrix& L, int dense_limit) {
  int n = L.n;
  if (n <= 0) throw InputError("eigenvalues: empty matrix");
  if (n > dense_limit)
    throw CapacityError("eigenvalues: n=" + std::to_string(n) +
                        " exceeds dense limit " + std::to_string(dense_limit));
  std::vector<double> lambda, V;
  if (n <= kJacobiLimit) {
    jacobi_eigen(L, lambda, V);
  } else {
    V = L.a;
    lambda.resize(n);
    int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, V.data(), n,
                              lambda.data());
    if (info != 0)
      throw std::runtime_error("dsyevd failed with info=" + std::to_string(info));
  }
  Spectrum s;
  s.eigenvalues = lambda;
  s.residual = eigen_residual(L, V, lambda);
  return s;
}

KWayConductance k_way_conductance_upper(const Graph& g,
                                        const std::vector<VertexSet>& modules) {
  if (modules.empty()) throw InputError("k_way_conductance_upper: no modules");
  std::vector<char> seen(g.num_vertices(), 0);
  for (const VertexSet& s : modules) {
    if (s.empty()) throw InputError("k_way_conductance_upper: empty module");
    for (int v : s) {
      if (v < 0 || v >= g.num_vertices())
        throw InputError("k_way_conductance_upper: vertex out of range");
      if (seen[v]) throw InputError("k_way_conductance_upper: modules overlap");
      seen[v] = 1;
    }
  }
  KWayConductance r;
  r.k = static_cast<int>(modules.size());
  for (const VertexSet& s : modules)
    r.max_phi = std::max(r.max_phi, g.conductance(s));
  return r;
}

bool cheeger_lower_check(const Spectrum& s, int k, double max_phi) {
  int n = static_cast<int>(s.eigenvalues.size());
  if (k < 1 || k > n) throw InputError("cheeger_lower_check: k out of range");
  return s.eigenvalues[k - 1] / 2.0 <= max_phi + 1e-8;
}

int small_eigenvalue_census(const Spectrum& s, double threshold) {
  return static_cast<int>(std::count_if(
      s.eigenvalues.begin(), s.eigenvalues.end(),
      [threshold](double l) { return l <= threshold; }));
}

CensusReport combinatorial_census(const Graph& g, const Partition& p, double eps,
                                  double phi_cap, double size_cap) {
  if (p.size() != g.num_vertices())
    throw InputError("combinatorial_census: partition does not match graph");
  CensusReport r;
  r.eps = eps;
  r.phi_cap = phi_cap;
  r.size_cap = size_cap;
  double vol = g.volume();
  std::vector<VertexSet> mods = p.modules();
  for (int j = 0; j < p.module_count(); ++j) {
    const VertexSet& mod = mods[j];
    CensusModule cm;
    cm.module = j;
    cm.size = static_cast<int>(mod.size());
    cm.volume = g.volume(mod);
    if (cm.size == g.num_vertices()) {
      // Phi(V) undefined: the module can never qualify
      cm.phi = std::numeric_limits<double>::quiet_NaN();
      cm.qualifies = false;
    } else {
      cm.phi = g.conductance(mod);
      cm.qualifies = cm.phi <= phi_cap && cm.size <= size_cap;
    }
    if (cm.qualifies) {
      ++r.qualified_count;
      r.qualified_volume += cm.volume;
    }
    r.modules.push_back(cm);
  }
  r.volume_fraction = vol > 0.0 ? r.qualified_volume / vol : 0.0;
  return r;
}

}  // namespace senet
