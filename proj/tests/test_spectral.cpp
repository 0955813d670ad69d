#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cliquespec/enumeration.hpp"
#include "cliquespec/io.hpp"
#include "cliquespec/spectral.hpp"
#include "cliquespec/zero_forcing.hpp"
#include "test_helpers.hpp"

using namespace cliquespec;
using namespace testutil;

namespace {

Graph fig1() { return load_graph(std::string(CLIQUESPEC_DATA_DIR) + "/fig1.edges"); }

// Characteristic polynomial x^3 + c2 x^2 + c1 x + c0 of a 3x3 matrix,
// via trace, principal 2x2 minors and determinant.
Cubic char_poly_3x3(const std::vector<std::vector<double>>& m) {
  Cubic c;
  c.c2 = -(m[0][0] + m[1][1] + m[2][2]);
  c.c1 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
         m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  c.c0 = -det;
  return c;
}

std::vector<int> apply_adjacency(const Graph& g, const std::vector<int>& x) {
  std::vector<int> y(g.vertex_count(), 0);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.neighbors(u)) y[u] += x[w];
  return y;
}

}  // namespace

TEST_CASE("spectral radius of complete graphs") {
  for (int m = 2; m <= 12; ++m) {
    auto res = spectral_radius(complete(m));
    CHECK(res.rho == doctest::Approx(m - 1).epsilon(1e-11));
    CHECK(res.residual <= 1e-12);
    double first = res.perron[0];
    for (double e : res.perron) CHECK(e == doctest::Approx(first).epsilon(1e-10));
  }
}

TEST_CASE("spectral radius of stars is sqrt(n-1)") {
  for (int n = 3; n <= 20; ++n) {
    auto res = spectral_radius(star(n));
    CHECK(res.rho == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-11));
  }
}

TEST_CASE("three triangles at a vertex has spectral radius 3") {
  auto res = spectral_radius(build_extremal(7, 4));
  CHECK(res.rho == doctest::Approx(3.0).epsilon(1e-12));
  // Cross-check against the dense spectrum oracle.
  CHECK(dense_spectrum(build_extremal(7, 4)).back() ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("frozen spectral radii of small extremal graphs") {
  CHECK(spectral_radius(build_extremal(8, 5)).rho ==
        doctest::Approx(3.534070196723).epsilon(1e-11));
  CHECK(spectral_radius(build_extremal(9, 6)).rho ==
        doctest::Approx(4.297070544363).epsilon(1e-11));
  CHECK(spectral_radius(build_extremal(10, 7)).rho ==
        doctest::Approx(5.182957134412).epsilon(1e-11));
  CHECK(spectral_radius(cliques_at_vertex({3, 3})).rho ==
        doctest::Approx((1.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-11));
  CHECK(spectral_radius(fig1()).rho ==
        doctest::Approx(4.061741549470).epsilon(1e-11));
}

TEST_CASE("power iteration agrees with the dense oracle") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_relabel(rep % 2 ? fig1() : build_extremal(11, 7), rng);
    auto res = spectral_radius(g);
    CHECK(res.rho == doctest::Approx(dense_spectrum(g).back()).epsilon(1e-10));
    double norm = 0;
    for (double e : res.perron) {
      CHECK(e > 0);
      norm += e * e;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("bipartite graphs converge") {
  CHECK(spectral_radius(path(3)).rho ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
  CHECK(spectral_radius(path(2)).rho == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("trivial and invalid inputs") {
  CHECK(spectral_radius(Graph(1)).rho == 0.0);
  CHECK_THROWS_AS(spectral_radius(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(complete(3), -1.0), std::invalid_argument);
}

TEST_CASE("rayleigh quotient hand values") {
  Graph k3 = complete(3);
  CHECK(rayleigh_quotient(k3, std::vector<double>{1, 1, 1}) ==
        doctest::Approx(2.0));
  CHECK(rayleigh_quotient(k3, std::vector<double>{1, 1, 0}) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(rayleigh_quotient(k3, std::vector<double>{0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("rayleigh quotient bounded by rho, tight at the Perron vector") {
  std::mt19937_64 rng(77);
  Graph g = build_extremal(10, 7);
  auto res = spectral_radius(g);
  CHECK(rayleigh_quotient(g, res.perron) == doctest::Approx(res.rho).epsilon(1e-10));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> x(g.vertex_count());
    for (double& e : x) e = dist(rng);
    double rq = rayleigh_quotient(g, x);
    CHECK(rq <= res.rho + 1e-9);
  }
}

TEST_CASE("quotient matrix basics") {
  Graph k4 = complete(4);
  auto whole = quotient_matrix(k4, {{0, 1, 2, 3}});
  CHECK(whole.equitable);
  CHECK(whole.q[0][0] == doctest::Approx(3.0));

  auto singletons = quotient_matrix(k4, {{0}, {1}, {2}, {3}});
  CHECK(singletons.equitable);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(singletons.q[i][j] == doctest::Approx(i == j ? 0.0 : 1.0));

  CHECK_THROWS_AS(quotient_matrix(k4, {{0, 1}, {1, 2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(quotient_matrix(k4, {{0, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_matrix(k4, {{0, 1}, {}, {2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("extremal partition reproduces the 3x3 quotient") {
  for (auto [n, k] : {std::pair{7, 4}, {8, 5}, {12, 8}, {20, 13}}) {
    auto qm = quotient_matrix(build_extremal(n, k), extremal_partition(n, k));
    REQUIRE(qm.equitable);
    REQUIRE(qm.q.size() == 3);
    CHECK(qm.q[0][0] == doctest::Approx(2.0 * k - n));
    CHECK(qm.q[0][1] == doctest::Approx(1.0));
    CHECK(qm.q[0][2] == doctest::Approx(0.0));
    CHECK(qm.q[1][0] == doctest::Approx(2.0 * k - n + 1));
    CHECK(qm.q[1][1] == doctest::Approx(0.0));
    CHECK(qm.q[1][2] == doctest::Approx(2.0 * (n - k - 1)));
    CHECK(qm.q[2][0] == doctest::Approx(0.0));
    CHECK(qm.q[2][1] == doctest::Approx(1.0));
    CHECK(qm.q[2][2] == doctest::Approx(1.0));
  }
}

TEST_CASE("non-equitable partitions are flagged") {
  // Unbalanced split of a path: middle vertex sees different counts.
  auto qm = quotient_matrix(path(3), {{0, 1}, {2}});
  CHECK(!qm.equitable);
}

TEST_CASE("equitable quotient shares the spectral radius up to n=30") {
  for (int n = 3; n <= 30; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= hi; ++k) {
      Graph g = build_extremal(n, k);
      auto qm = quotient_matrix(g, extremal_partition(n, k));
      REQUIRE(qm.equitable);
      double rho_q = quotient_spectral_radius(qm);
      double rho_a = spectral_radius(g, 1e-12).rho;
      CHECK(std::abs(rho_q - rho_a) <= 1e-9);
    }
  }
}

TEST_CASE("quotient spectrum embeds in the adjacency spectrum") {
  for (auto [n, k] : {std::pair{9, 6}, {11, 7}, {16, 11}}) {
    Graph g = build_extremal(n, k);
    auto spec = dense_spectrum(g);
    for (double root : cubic_real_roots(extremal_cubic(n, k))) {
      bool found = false;
      for (double ev : spec)
        if (std::abs(ev - root) <= 1e-8) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("cubic solver recovers known roots") {
  // (x+2)(x-1)(x-3) = x^3 - 2x^2 - 5x + 6
  auto roots = cubic_real_roots({-2.0, -5.0, 6.0});
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(roots[2] == doctest::Approx(3.0).epsilon(1e-12));

  // (x-1)^3
  auto triple = cubic_real_roots({-3.0, 3.0, -1.0});
  for (double r : triple) CHECK(r == doctest::Approx(1.0).epsilon(1e-6));

  // (x-1)(x^2+x+2): single real root
  auto single = cubic_real_roots({0.0, 1.0, -2.0});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("extremal cubic matches the quotient characteristic polynomial") {
  for (int n = 3; n <= 30; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= std::min(hi, n - 2); ++k) {
      auto qm = quotient_matrix(build_extremal(n, k), extremal_partition(n, k));
      REQUIRE(qm.q.size() == 3);
      Cubic via_q = char_poly_3x3(qm.q);
      Cubic direct = extremal_cubic(n, k);
      CHECK(direct.c2 == doctest::Approx(via_q.c2).epsilon(1e-9));
      CHECK(direct.c1 == doctest::Approx(via_q.c1).epsilon(1e-9));
      CHECK(direct.c0 == doctest::Approx(via_q.c0).epsilon(1e-9));
    }
  }
}

TEST_CASE("frozen cubic for (7,4)") {
  Cubic c = extremal_cubic(7, 4);
  CHECK(c.c2 == -2.0);
  CHECK(c.c1 == -5.0);
  CHECK(c.c0 == 6.0);
  CHECK(cubic_largest_root(c) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("boundary k = n-1 collapses to the single clique") {
  for (int n : {5, 9, 14}) {
    Cubic c = extremal_cubic(n, n - 1);
    CHECK(std::abs(c.eval(n - 1.0)) <= 1e-9);
    CHECK(cubic_largest_root(c) == doctest::Approx(n - 1.0).epsilon(1e-11));
  }
}

TEST_CASE("largest cubic root equals the extremal spectral radius") {
  for (int n = 3; n <= 30; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= hi; ++k) {
      double via_cubic = cubic_largest_root(extremal_cubic(n, k));
      double via_graph = spectral_radius(build_extremal(n, k)).rho;
      CHECK(std::abs(via_cubic - via_graph) <= 1e-9);
    }
  }
}

TEST_CASE("characteristic polynomial factorization multiplicities") {
  for (auto [n, k] : {std::pair{8, 5}, {7, 4}, {12, 8}, {20, 14}}) {
    auto fac = char_poly_extremal(n, k);
    CHECK(fac.mult_plus_one == n - k - 2);
    CHECK(fac.mult_minus_one == k - 1);
    auto expect = fac.eigenvalues(n);
    auto actual = dense_spectrum(build_extremal(n, k));
    REQUIRE(expect.size() == actual.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
      CHECK(std::abs(expect[i] - actual[i]) <= 1e-9);
  }
  CHECK_THROWS_AS(char_poly_extremal(9, 8), std::invalid_argument);
}

TEST_CASE("explicit eigenvector families at -1 and +1") {
  for (auto [n, k] : {std::pair{9, 6}, {12, 8}, {11, 7}}) {
    Graph g = build_extremal(n, k);
    const int big = 2 * k - n + 2;
    auto triangle = [&](int i) {  // 1-based triangle index
      return std::pair{big + 2 * (i - 1), big + 2 * (i - 1) + 1};
    };
    const int triangles = n - k - 1;

    // Differences inside the big block and inside each triangle: Ax = -x.
    std::vector<std::vector<int>> minus_family;
    for (int j = 2; j <= 2 * k - n + 1; ++j) {
      std::vector<int> x(n, 0);
      x[1] = 1;
      x[j] = -1;
      minus_family.push_back(x);
    }
    for (int i = 1; i <= triangles; ++i) {
      auto [u1, u2] = triangle(i);
      std::vector<int> x(n, 0);
      x[u1] = 1;
      x[u2] = -1;
      minus_family.push_back(x);
    }
    CHECK(static_cast<int>(minus_family.size()) == k - 1);
    for (const auto& x : minus_family) {
      auto y = apply_adjacency(g, x);
      for (int v = 0; v < n; ++v) CHECK(y[v] == -x[v]);
    }

    // Differences of triangle pair-sums: Ax = x.
    std::vector<std::vector<int>> plus_family;
    for (int i = 2; i <= triangles; ++i) {
      auto [a1, a2] = triangle(1);
      auto [b1, b2] = triangle(i);
      std::vector<int> x(n, 0);
      x[a1] = x[a2] = 1;
      x[b1] = x[b2] = -1;
      plus_family.push_back(x);
    }
    CHECK(static_cast<int>(plus_family.size()) == n - k - 2);
    for (const auto& x : plus_family) {
      auto y = apply_adjacency(g, x);
      for (int v = 0; v < n; ++v) CHECK(y[v] == x[v]);
    }
  }
}

TEST_CASE("lower bound values and strictness") {
  CHECK(extremal_lower_bound(7, 4) == doctest::Approx(std::sqrt(6.0)));
  CHECK(extremal_lower_bound(12, 7) == doctest::Approx(std::sqrt(11.0)));
  CHECK(extremal_lower_bound(10, 9) == doctest::Approx(9.0));
  // k = n-1 attains the bound exactly; everywhere else it is strict.
  CHECK(spectral_radius(build_extremal(10, 9)).rho ==
        doctest::Approx(9.0).epsilon(1e-11));
  for (int n = 5; n <= 14; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k < hi; ++k) {
      double rho = cubic_largest_root(extremal_cubic(n, k));
      CHECK(rho > extremal_lower_bound(n, k) + 1e-9);
    }
  }
}

TEST_CASE("upper bound case selection") {
  CHECK(extremal_upper_bound(12, 7).which_case == 1);
  CHECK(extremal_upper_bound(12, 10).which_case == 2);
  CHECK(extremal_upper_bound(100, 52).which_case == 1);
  CHECK(extremal_upper_bound(100, 55).which_case == 2);
  // Boundary: n-1 a perfect square and a = sqrt(n-1) stays in case 1.
  CHECK(extremal_upper_bound(10, 6).which_case == 1);
  CHECK(extremal_upper_bound(10, 7).which_case == 2);
}

TEST_CASE("case-2 inapplicability is reported, not hidden") {
  auto ub = extremal_upper_bound(14, 12);
  CHECK(ub.which_case == 2);
  CHECK(!ub.applicable);
  CHECK(3.0 * ub.params.b - ub.params.a <= 0.0);
}

TEST_CASE("upper bound strictly dominates rho") {
  for (int n = 5; n <= 40; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= hi - 1; ++k) {
      auto ub = extremal_upper_bound(n, k);
      if (!ub.applicable) continue;
      double rho = cubic_largest_root(extremal_cubic(n, k));
      CHECK(ub.value > rho + 1e-9);
    }
  }
}

TEST_CASE("pendant Perron structure") {
  Graph bowtie = cliques_at_vertex({3, 3});
  auto ct = blocks_and_cut_vertices(bowtie);
  CHECK(perron_pendant_check(bowtie, ct));
  auto perron = spectral_radius(bowtie).perron;
  for (int v = 1; v < 5; ++v) {
    CHECK(perron[0] > perron[v] + 1e-9);
    CHECK(perron[v] == doctest::Approx(perron[1]).epsilon(1e-10));
  }

  Graph g96 = build_extremal(9, 6);
  CHECK(perron_pendant_check(g96, blocks_and_cut_vertices(g96)));

  CHECK_THROWS_AS(
      perron_pendant_check(complete(5), blocks_and_cut_vertices(complete(5))),
      std::invalid_argument);
}

TEST_CASE("adding an edge strictly raises the spectral radius") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 4 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(static_cast<int>(rng() % v), v);
    Graph g(n, edges);
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) continue;
    auto [u, v] = missing[rng() % missing.size()];
    CHECK(spectral_radius(g.with_edge(u, v)).rho >
          spectral_radius(g).rho + 1e-9);
  }
}
