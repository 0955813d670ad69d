#include "cliquespec/zero_forcing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cliquespec {

namespace {

// Closure on the bitmask representation (n <= 64), no trace.
std::uint64_t closure_mask(const Graph& g, std::uint64_t blue) {
  const int n = g.vertex_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (!((blue >> u) & 1)) continue;
      std::uint64_t white = g.neighbor_mask(u) & ~blue;
      if (std::popcount(white) == 1) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

}  // namespace

ForcingState forcing_closure(const Graph& g, std::span<const int> seed) {
  const int n = g.vertex_count();
  std::vector<char> blue(n, 0);
  for (int v : seed) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("seed vertex " + std::to_string(v) +
                                  " out of range");
    blue[v] = 1;
  }
  ForcingState st;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      if (!blue[u]) continue;
      int white = -1, count = 0;
      for (int w : g.neighbors(u)) {
        if (!blue[w]) {
          white = w;
          if (++count > 1) break;
        }
      }
      if (count == 1) {
        blue[white] = 1;
        st.trace.emplace_back(u, white);
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (blue[v]) st.blue.push_back(v);
  return st;
}

bool is_zero_forcing_set(const Graph& g, std::span<const int> s) {
  return forcing_closure(g, s).all_blue(g);
}

ZeroForcingResult zero_forcing_number_exhaustive(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 64)
    throw std::runtime_error(
        "graph has " + std::to_string(n) + " vertices, above the exhaustive cap " +
        std::to_string(std::min(cap, 64)) +
        "; use the clique-tree formula instead");
  if (n == 0) return {0, {}};

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << n) - 1);
  for (int size = 0; size <= n; ++size) {
    // Subsets of fixed size in lexicographic order over sorted vertex tuples,
    // so the first hit is the lexicographically least witness.
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int v : idx) mask |= std::uint64_t{1} << v;
      if (closure_mask(g, mask) == full) {
        return {size, idx};
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Unreachable: the full vertex set always forces.
  return {n, {}};
}

int zero_forcing_number_formula(const CliqueTreeStructure& ct) {
  int sum_z = 0;
  for (const auto& blk : ct.blocks) {
    if (blk.size() < 3)
      throw std::invalid_argument(
          "formula requires every block to have size >= 3 (found size " +
          std::to_string(blk.size()) + ")");
    sum_z += static_cast<int>(blk.size()) - 1;
  }
  int overlap = 0;
  for (int bi : ct.block_index) overlap += bi - 1;
  return sum_z - overlap;
}

bool pendant_reduction_check(const Graph& g1, int v, int m, int cap) {
  if (m < 3) throw std::invalid_argument("pendant block size must be >= 3");
  if (v < 0 || v >= g1.vertex_count())
    throw std::invalid_argument("attachment vertex out of range");
  if (!is_clique_tree(g1, 3))
    throw std::invalid_argument("g1 must be a clique tree with blocks >= 3");

  const int n1 = g1.vertex_count();
  auto edges = g1.edges();
  std::vector<int> fresh(m - 1);
  for (int i = 0; i < m - 1; ++i) fresh[i] = n1 + i;
  for (int i = 0; i < m - 1; ++i) {
    edges.emplace_back(v, fresh[i]);
    for (int j = i + 1; j < m - 1; ++j) edges.emplace_back(fresh[i], fresh[j]);
  }
  Graph composed(n1 + m - 1, edges);

  int z_composed = zero_forcing_number_exhaustive(composed, cap).z;
  int z_g1 = zero_forcing_number_exhaustive(g1, cap).z;
  return z_composed == z_g1 + (m - 1) - 1;
}

std::pair<int, int> valid_k_range(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  return {n / 2 + 1, n - 1};
}

}  // namespace cliquespec
