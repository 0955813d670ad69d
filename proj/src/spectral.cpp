#include "cliquespec/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cliquespec/kernels.hpp"

namespace cliquespec {

namespace {

std::vector<double> dense_adjacency(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
  return a;
}

// One shifted power step: y = (A + shift I) x. Returns the Rayleigh estimate
// of the unshifted matrix (x must have unit norm).
double power_step(const std::vector<double>& a, const std::vector<double>& x,
                  std::vector<double>& y, double shift, std::size_t n) {
  const auto& ops = kernels::active();
  ops.gemv(a.data(), x.data(), y.data(), n);
  ops.axpy(shift, x.data(), y.data(), n);
  return ops.dot(x.data(), y.data(), n) - shift;
}

double residual_inf(const std::vector<double>& y, const std::vector<double>& x,
                    double shifted_rho, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    worst = std::max(worst, std::abs(y[i] - shifted_rho * x[i]));
  return worst;
}

SpectralResult dense_perron(const Graph& g, double tol) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed");

  SpectralResult res;
  res.dense_fallback = true;
  Eigen::VectorXd v = es.eigenvectors().col(n - 1);
  if (v.sum() < 0) v = -v;
  v.normalize();

  // A few shifted power steps polish the residual down to the tolerance.
  auto dense = dense_adjacency(g);
  std::vector<double> x(v.data(), v.data() + n), y(n);
  const double shift = 1.0;
  double rho = es.eigenvalues()(n - 1);
  for (int step = 0; step < 16; ++step) {
    rho = power_step(dense, x, y, shift, n);
    double r = residual_inf(y, x, rho + shift, n);
    if (r <= tol * 0.25) break;
    double nrm = kernels::nrm2(y.data(), n);
    kernels::active().scal(1.0 / nrm, y.data(), n);
    x.swap(y);
  }
  rho = power_step(dense, x, y, shift, n);
  res.rho = rho;
  res.residual = residual_inf(y, x, rho + shift, n);
  res.perron = std::move(x);

  if (res.residual > tol)
    throw std::runtime_error("eigensolver residual " +
                             std::to_string(res.residual) +
                             " above tolerance " + std::to_string(tol));
  for (double e : res.perron)
    if (!(e > 0))
      throw std::runtime_error("Perron vector has a non-positive entry");
  return res;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (n == 1) return {0.0, {1.0}, 0.0, 0, false};

  auto dense = dense_adjacency(g);
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  // The shift keeps the iteration convergent on bipartite spectra and keeps
  // the iterates entrywise positive.
  const double shift = 1.0;
  const int max_iters = 200 * n + 2000;

  SpectralResult res;
  for (int it = 1; it <= max_iters; ++it) {
    double rho = power_step(dense, x, y, shift, n);
    double r = residual_inf(y, x, rho + shift, n);
    if (r <= tol) {
      res.rho = rho;
      res.residual = r;
      res.iterations = it;
      res.perron = x;
      for (double e : res.perron)
        if (!(e > 0)) return dense_perron(g, tol);
      return res;
    }
    double nrm = kernels::nrm2(y.data(), n);
    kernels::active().scal(1.0 / nrm, y.data(), n);
    x.swap(y);
  }
  // Gap too small for plain power iteration; escalate, never return as-is.
  return dense_perron(g, tol);
}

double rayleigh_quotient(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw std::invalid_argument("vector length does not match vertex count");
  double denom = 0.0;
  for (double e : x) denom += e * e;
  if (denom == 0.0) throw std::invalid_argument("zero vector");
  double num = 0.0;
  for (const auto& [u, v] : g.edges()) num += x[u] * x[v];
  return 2.0 * num / denom;
}

std::vector<double> dense_spectrum(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

QuotientMatrix quotient_matrix(const Graph& g,
                               const std::vector<std::vector<int>>& partition) {
  const int n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty())
      throw std::invalid_argument("partition part " + std::to_string(i) +
                                  " is empty");
    for (int v : partition[i]) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition vertex out of range");
      if (part_of[v] != -1)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two parts");
      part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (part_of[v] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " missing from partition");

  const int parts = static_cast<int>(partition.size());
  QuotientMatrix qm;
  qm.partition = partition;
  qm.q.assign(parts, std::vector<double>(parts, 0.0));
  qm.equitable = true;
  for (int i = 0; i < parts; ++i) {
    std::vector<int> first_counts(parts, -1);
    std::vector<long long> sums(parts, 0);
    for (int v : partition[i]) {
      std::vector<int> counts(parts, 0);
      for (int w : g.neighbors(v)) ++counts[part_of[w]];
      for (int j = 0; j < parts; ++j) {
        sums[j] += counts[j];
        if (first_counts[j] == -1)
          first_counts[j] = counts[j];
        else if (first_counts[j] != counts[j])
          qm.equitable = false;
      }
    }
    for (int j = 0; j < parts; ++j)
      qm.q[i][j] = static_cast<double>(sums[j]) /
                   static_cast<double>(partition[i].size());
  }
  return qm;
}

double quotient_spectral_radius(const QuotientMatrix& qm) {
  const int k = static_cast<int>(qm.q.size());
  Eigen::MatrixXd m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = qm.q[i][j];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quotient eigensolver failed");
  double rho = 0.0;
  for (int i = 0; i < k; ++i)
    rho = std::max(rho, std::abs(es.eigenvalues()(i)));
  return rho;
}

bool perron_pendant_check(const Graph& g, const CliqueTreeStructure& ct,
                          double margin) {
  auto pendants = ct.pendant_blocks();
  if (pendants.empty())
    throw std::invalid_argument("graph has no pendant block");
  auto perron = spectral_radius(g).perron;
  for (int b : pendants) {
    const int cut = ct.block_cuts(b).front();
    double leaf_min = 2.0, leaf_max = -1.0;
    for (int v : ct.blocks[b]) {
      if (v == cut) continue;
      leaf_min = std::min(leaf_min, perron[v]);
      leaf_max = std::max(leaf_max, perron[v]);
    }
    if (perron[cut] - leaf_max < margin) return false;
    if (leaf_max - leaf_min > margin) return false;
  }
  return true;
}

}  // namespace cliquespec
