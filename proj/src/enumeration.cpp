#include "cliquespec/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/spectral.hpp"
#include "cliquespec/zero_forcing.hpp"

namespace cliquespec {

namespace {

// Remaining vertex budget r is fillable by further blocks iff r == 0 or
// r >= min_block - 1 (each block consumes size-1 fresh vertices).
bool budget_ok(int r, int min_block) { return r == 0 || r >= min_block - 1; }

void extend(const Graph& g, int n, int min_block,
            std::set<std::string>& seen, std::vector<Graph>& out) {
  const int used = g.vertex_count();
  if (used == n) {
    out.push_back(g);
    return;
  }
  for (int v = 0; v < used; ++v) {
    for (int t = min_block; used + t - 1 <= n; ++t) {
      if (!budget_ok(n - used - (t - 1), min_block)) continue;
      auto edges = g.edges();
      for (int j = 0; j < t - 1; ++j) {
        edges.emplace_back(v, used + j);
        for (int l = j + 1; l < t - 1; ++l)
          edges.emplace_back(used + j, used + l);
      }
      Graph h(used + t - 1, edges);
      if (seen.insert(canonical_key(h)).second) extend(h, n, min_block, seen, out);
    }
  }
}

}  // namespace

std::vector<Graph> enumerate_clique_trees(int n, int min_block, int cap) {
  if (min_block < 2) throw std::invalid_argument("min_block must be >= 2");
  if (n < min_block)
    throw std::invalid_argument("n must be at least the minimum block size");
  if (n > cap)
    throw std::runtime_error("n = " + std::to_string(n) +
                             " exceeds the enumeration cap " +
                             std::to_string(cap));

  std::set<std::string> seen;
  std::vector<Graph> out;
  for (int t = min_block; t <= n; ++t) {
    if (!budget_ok(n - t, min_block)) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) edges.emplace_back(i, j);
    Graph g(t, edges);
    if (seen.insert(canonical_key(g)).second) extend(g, n, min_block, seen, out);
  }
  std::vector<std::pair<std::string, std::size_t>> order;
  order.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    order.emplace_back(canonical_key(out[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<Graph> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<Graph> class_G(int n, int k, int cap) {
  require_valid_nk(n, k);
  std::vector<Graph> out;
  for (auto& g : enumerate_clique_trees(n, 3, cap)) {
    auto ct = blocks_and_cut_vertices(g);
    if (n - ct.block_count() != k) continue;
    if (zero_forcing_number_formula(ct) != k)
      throw std::runtime_error("formula disagrees with block count");
    out.push_back(std::move(g));
  }
  if (out.empty())
    throw std::runtime_error("class G(" + std::to_string(n) + "," +
                             std::to_string(k) + ") is empty");
  return out;
}

Graph build_extremal(int n, int k) {
  require_valid_nk(n, k);
  const int big = 2 * k - n + 2;
  std::vector<Edge> edges;
  for (int i = 0; i < big; ++i)
    for (int j = i + 1; j < big; ++j) edges.emplace_back(i, j);
  int next = big;
  for (int t = 0; t < n - k - 1; ++t) {
    edges.emplace_back(0, next);
    edges.emplace_back(0, next + 1);
    edges.emplace_back(next, next + 1);
    next += 2;
  }
  return Graph(n, edges);
}

std::vector<std::vector<int>> extremal_partition(int n, int k) {
  require_valid_nk(n, k);
  const int big = 2 * k - n + 2;
  std::vector<std::vector<int>> parts;
  std::vector<int> siblings;
  for (int v = 1; v < big; ++v) siblings.push_back(v);
  parts.push_back(siblings);
  parts.push_back({0});
  if (k <= n - 2) {
    std::vector<int> leaves;
    for (int v = big; v < n; ++v) leaves.push_back(v);
    parts.push_back(leaves);
  }
  return parts;
}

ExtremalReport verify_main_theorem(int n, int k, double tol, int cap) {
  ExtremalReport rep;
  rep.n = n;
  rep.k = k;
  auto family = class_G(n, k, cap);
  rep.class_size = static_cast<int>(family.size());

  std::vector<std::pair<double, std::string>> scored;
  for (const auto& g : family)
    scored.emplace_back(spectral_radius(g, tol).rho, canonical_key(g));
  std::sort(scored.begin(), scored.end());

  rep.max_rho = scored.back().first;
  rep.argmax_canonical = scored.back().second;
  if (scored.size() >= 2) {
    rep.runner_up_rho = scored[scored.size() - 2].first;
    rep.unique = rep.max_rho - rep.runner_up_rho > 1e-9;
  } else {
    rep.runner_up_rho = std::numeric_limits<double>::quiet_NaN();
    rep.unique = true;
  }
  rep.matches_extremal =
      rep.argmax_canonical == canonical_key(build_extremal(n, k));
  return rep;
}

RemarkCheck verify_remark_range(int n, int cap) {
  RemarkCheck chk;
  chk.n = n;
  chk.min_z = std::numeric_limits<int>::max();
  chk.max_z = 0;
  std::map<int, std::vector<std::vector<int>>> by_z;
  for (const auto& g : enumerate_clique_trees(n, 3, cap)) {
    auto ct = blocks_and_cut_vertices(g);
    int z = zero_forcing_number_formula(ct);
    chk.min_z = std::min(chk.min_z, z);
    chk.max_z = std::max(chk.max_z, z);
    by_z[z].push_back(ct.size_multiset());
  }
  auto [lo, hi] = valid_k_range(n);
  chk.range_matches = chk.min_z == lo && chk.max_z == hi;

  const auto& minimizers = by_z[chk.min_z];
  chk.min_z_class_count = static_cast<int>(minimizers.size());
  chk.min_z_blocks = minimizers.front();
  bool all_same = std::all_of(
      minimizers.begin(), minimizers.end(),
      [&](const std::vector<int>& m) { return m == chk.min_z_blocks; });
  chk.triangle_count = static_cast<int>(
      std::count(chk.min_z_blocks.begin(), chk.min_z_blocks.end(), 3));

  // Even n: one K_4 and n/2-2 triangles. Odd n: triangles only (floor(n/2)
  // of them; the block count follows from b = n - k).
  std::vector<int> expected;
  if (n % 2 == 0) {
    for (int i = 0; i < n / 2 - 2; ++i) expected.push_back(3);
    expected.push_back(4);
  } else {
    for (int i = 0; i < n / 2; ++i) expected.push_back(3);
  }
  chk.minimizer_matches = all_same && chk.min_z_blocks == expected;
  return chk;
}

}  // namespace cliquespec
