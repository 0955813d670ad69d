#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cliquespec/spectral.hpp"
#include "cliquespec/zero_forcing.hpp"

namespace cliquespec {

void require_valid_nk(int n, int k) {
  auto [lo, hi] = valid_k_range(n);
  if (k < lo || k > hi)
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside attainable range [" +
                                std::to_string(lo) + "," + std::to_string(hi) +
                                "] for n = " + std::to_string(n));
}

std::vector<double> cubic_real_roots(const Cubic& c) {
  // Depressed form t^3 + p t + q with x = t - c2/3.
  const double off = c.c2 / 3.0;
  const double p = c.c1 - c.c2 * c.c2 / 3.0;
  const double q = 2.0 * c.c2 * c.c2 * c.c2 / 27.0 - c.c2 * c.c1 / 3.0 + c.c0;

  std::vector<double> roots;
  const double d = q * q / 4.0 + p * p * p / 27.0;
  if (p == 0.0 && q == 0.0) {
    roots.assign(3, -off);
  } else if (d > 0.0) {
    // One real root (Cardano).
    const double s = std::sqrt(d);
    roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) - off);
  } else {
    // Three real roots (trigonometric form); p < 0 is implied by d <= 0.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int i = 0; i < 3; ++i)
      roots.push_back(m * std::cos(theta - 2.0 * M_PI * i / 3.0) - off);
  }

  // Newton polish on the original cubic.
  for (double& r : roots) {
    for (int it = 0; it < 4; ++it) {
      const double f = c.eval(r);
      const double df = (3.0 * r + 2.0 * c.c2) * r + c.c1;
      if (df == 0.0) break;
      const double step = f / df;
      r -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(r))) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double cubic_largest_root(const Cubic& c) { return cubic_real_roots(c).back(); }

Cubic extremal_cubic(int n, int k) {
  require_valid_nk(n, k);
  const int s = 2 * k - n;
  const int t = n - k - 1;
  Cubic c;
  c.c2 = static_cast<double>(n - 2 * k - 1);
  c.c1 = static_cast<double>(-(2 * n - 2 * k - 1));
  c.c0 = static_cast<double>(2 * s * t + s + 1);
  return c;
}

std::vector<double> CharPolyFactorization::eigenvalues(int n) const {
  std::vector<double> ev;
  ev.reserve(n);
  for (int i = 0; i < mult_plus_one; ++i) ev.push_back(1.0);
  for (int i = 0; i < mult_minus_one; ++i) ev.push_back(-1.0);
  for (double r : cubic_real_roots(f)) ev.push_back(r);
  std::sort(ev.begin(), ev.end());
  return ev;
}

CharPolyFactorization char_poly_extremal(int n, int k) {
  require_valid_nk(n, k);
  if (k > n - 2)
    throw std::invalid_argument(
        "factorization requires k <= n-2 (k = n-1 is the single-clique "
        "boundary)");
  CharPolyFactorization fac;
  fac.mult_plus_one = n - k - 2;
  fac.mult_minus_one = k - 1;
  fac.f = extremal_cubic(n, k);
  return fac;
}

double extremal_lower_bound(int n, int k) {
  require_valid_nk(n, k);
  return std::max(static_cast<double>(2 * k - n + 1),
                  std::sqrt(static_cast<double>(n - 1)));
}

UpperBound extremal_upper_bound(int n, int k) {
  require_valid_nk(n, k);
  UpperBound ub;
  BoundParameters& bp = ub.params;
  bp.n = n;
  bp.k = k;
  bp.a = 2 * k - n + 1;
  bp.b = std::sqrt(static_cast<double>(n - 1));
  const double a = bp.a;
  const double b = bp.b;
  bp.alpha = 2.0 * n - 2.0 * a * b + a - 3.0;
  bp.beta = (1.0 - a) * (a - b) + k - static_cast<double>(k) * (n - a);

  // Case split at k = (n-1+sqrt(n-1))/2, i.e. a <= sqrt(n-1), decided in
  // exact integer arithmetic.
  if (static_cast<long long>(bp.a) * bp.a <= n - 1) {
    ub.which_case = 1;
    ub.applicable = true;
    const double inner = a * a + a - n;
    const double disc = inner * inner + 8.0 * a * k * (n - 1.0 - a);
    ub.value = a + (n - a * (a + 1.0) + std::sqrt(disc)) / (4.0 * a);
  } else {
    ub.which_case = 2;
    const double lead = 3.0 * b - a;
    if (lead <= 0.0) {
      ub.applicable = false;
      return ub;
    }
    ub.applicable = true;
    const double disc = bp.alpha * bp.alpha - 4.0 * bp.beta * lead;
    ub.value = b + (std::sqrt(disc) - bp.alpha) / (2.0 * lead);
  }
  return ub;
}

}  // namespace cliquespec
