#pragma once

#include <array>
#include <span>
#include <vector>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/graph.hpp"

namespace cliquespec {

// Spectral radius of a connected graph together with the Perron vector
// (unit 2-norm, entrywise positive) and convergence metadata.
struct SpectralResult {
  double rho = 0.0;
  std::vector<double> perron;
  double residual = 0.0;  // inf-norm of A*perron - rho*perron
  int iterations = 0;
  bool dense_fallback = false;
};

// Shifted power iteration with Rayleigh-quotient estimates, seeded with the
// all-ones vector; falls back to a dense symmetric eigensolve when the gap is
// too small to converge within the iteration cap. Never returns silently with
// residual above tol. Throws on disconnected input.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-12);

// 2 * sum_{u~w} x_u x_w / sum_u x_u^2. Throws on the zero vector.
double rayleigh_quotient(const Graph& g, std::span<const double> x);

// Full adjacency spectrum, ascending (dense symmetric eigensolve).
std::vector<double> dense_spectrum(const Graph& g);

// Quotient matrix of the adjacency matrix under a vertex partition.
// q[i][j] is the average number of neighbors in part j over vertices of
// part i; the partition is equitable iff that count is constant on every
// part pair (exact integer check).
struct QuotientMatrix {
  std::vector<std::vector<int>> partition;
  std::vector<std::vector<double>> q;
  bool equitable = false;
};

// Throws if the parts do not cover the vertex set disjointly or a part is
// empty.
QuotientMatrix quotient_matrix(const Graph& g,
                               const std::vector<std::vector<int>>& partition);

// Spectral radius (largest eigenvalue modulus) of the quotient matrix.
double quotient_spectral_radius(const QuotientMatrix& qm);

// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct Cubic {
  double c2 = 0, c1 = 0, c0 = 0;
  double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
};

// All real roots, ascending (closed form plus a Newton polish).
std::vector<double> cubic_real_roots(const Cubic& c);
double cubic_largest_root(const Cubic& c);

// Characteristic polynomial of the 3-part equitable quotient of the extremal
// clique tree on (n, k): x^3 + (n-2k-1) x^2 - (2n-2k-1) x + c0 with
// c0 = 2(2k-n)(n-k-1) + (2k-n) + 1. Its largest root is the spectral radius
// of the extremal graph. Throws on (n, k) outside the attainable range.
Cubic extremal_cubic(int n, int k);

// Factored characteristic polynomial of the extremal graph's adjacency
// matrix: (x-1)^{n-k-2} (x+1)^{k-1} f(x). Requires k <= n-2 (for k = n-1 the
// first exponent would be negative; that boundary is excluded).
struct CharPolyFactorization {
  int mult_plus_one = 0;   // exponent of (x - 1)
  int mult_minus_one = 0;  // exponent of (x + 1)
  Cubic f;

  // The full eigenvalue multiset implied by the factorization, ascending.
  std::vector<double> eigenvalues(int n) const;
};

CharPolyFactorization char_poly_extremal(int n, int k);

// max{2k-n+1, sqrt(n-1)}; strictly below the extremal spectral radius for
// every attainable (n, k) except k = n-1 where it is attained exactly.
double extremal_lower_bound(int n, int k);

struct BoundParameters {
  int n = 0, k = 0;
  int a = 0;         // 2k - n + 1
  double b = 0;      // sqrt(n - 1)
  double alpha = 0;  // 2n - 2ab + a - 3
  double beta = 0;   // (1-a)(a-b) + k - k(n-a)
};

// Closed-form upper bound for the extremal spectral radius. Case 1 applies
// when a^2 <= n-1 (equivalently k <= (n-1+sqrt(n-1))/2); otherwise case 2,
// which is only usable when 3b - a > 0 — inapplicable pairs are flagged, not
// hidden.
struct UpperBound {
  int which_case = 0;       // 1 or 2
  bool applicable = false;  // false only in case 2 with 3b - a <= 0
  double value = 0.0;       // meaningful iff applicable
  BoundParameters params;
};

UpperBound extremal_upper_bound(int n, int k);

// For every pendant block: cut-vertex Perron entry strictly above every
// leaf entry, and all leaf entries mutually equal within tolerance.
// Throws when the graph has no pendant block.
bool perron_pendant_check(const Graph& g, const CliqueTreeStructure& ct,
                          double margin = 1e-9);

void require_valid_nk(int n, int k);

}  // namespace cliquespec
