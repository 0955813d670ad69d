#include "cliquespec/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "cliquespec/spectral.hpp"
#include "cliquespec/zero_forcing.hpp"

namespace cliquespec {

namespace {

constexpr double kTieMargin = 1e-9;

std::vector<int> block_without(const std::vector<int>& blk,
                               std::initializer_list<int> drop) {
  std::vector<int> out;
  for (int v : blk)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

// Vertices of K \ {v} sorted by (Perron entry, label), ascending.
std::vector<int> by_perron(const std::vector<int>& blk, int v,
                           const std::vector<double>& x) {
  auto rest = block_without(blk, {v});
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });
  return rest;
}

int find_block_of_edge(const CliqueTreeStructure& ct, int u, int v) {
  for (int b : ct.blocks_of_vertex[u]) {
    const auto& blk = ct.blocks[b];
    if (std::binary_search(blk.begin(), blk.end(), v)) return b;
  }
  return -1;
}

void check_heavy_pair_preconditions(const CliqueTreeStructure& ct, int v,
                                    int l_block, int m_block) {
  if (l_block < 0 || l_block >= ct.block_count() || m_block < 0 ||
      m_block >= ct.block_count() || l_block == m_block)
    throw std::invalid_argument("invalid block ids");
  if (ct.blocks[l_block].size() < 4 || ct.blocks[m_block].size() < 4)
    throw std::invalid_argument("both blocks must have size >= 4");
  const auto& lb = ct.blocks[l_block];
  const auto& mb = ct.blocks[m_block];
  if (!std::binary_search(lb.begin(), lb.end(), v) ||
      !std::binary_search(mb.begin(), mb.end(), v))
    throw std::invalid_argument("v must belong to both blocks");
}

void check_least_pair(const std::vector<int>& ordered, int p, int q,
                      const std::vector<double>& x) {
  // {p, q} must be a valid least-entry pair of the block minus the cut
  // vertex, with x_p <= x_q, up to the tie margin.
  if (p == q) throw std::invalid_argument("p and q must be distinct");
  if (std::find(ordered.begin(), ordered.end(), p) == ordered.end() ||
      std::find(ordered.begin(), ordered.end(), q) == ordered.end())
    throw std::invalid_argument("p and q must lie in the K_l block without v");
  if (x[p] > x[q] + kTieMargin)
    throw std::invalid_argument("need x_p <= x_q");
  for (int u : ordered) {
    if (u == p || u == q) continue;
    if (x[q] > x[u] + kTieMargin)
      throw std::invalid_argument(
          "p,q must carry the two smallest Perron entries of K_l minus v");
  }
}

}  // namespace

Graph relocate_pendant_triangles(const Graph& g, int km_block) {
  auto ct = blocks_and_cut_vertices(g);
  if (!is_clique_tree(g, 3))
    throw std::invalid_argument("input is not a clique tree with blocks >= 3");
  if (km_block < 0 || km_block >= ct.block_count())
    throw std::invalid_argument("invalid block id");

  const auto& km = ct.blocks[km_block];
  std::set<int> attach_points;
  std::vector<std::pair<int, std::vector<int>>> triangles;  // (attach, leaves)
  for (int b = 0; b < ct.block_count(); ++b) {
    if (b == km_block) continue;
    const auto& blk = ct.blocks[b];
    if (blk.size() != 3)
      throw std::invalid_argument(
          "every block besides the chosen one must be a triangle");
    std::vector<int> shared, leaves;
    for (int v : blk) {
      if (std::binary_search(km.begin(), km.end(), v))
        shared.push_back(v);
      else
        leaves.push_back(v);
    }
    if (shared.size() != 1 || ct.block_index[leaves[0]] != 1 ||
        ct.block_index[leaves[1]] != 1)
      throw std::invalid_argument(
          "every triangle must hang pendant from a vertex of the chosen block");
    attach_points.insert(shared[0]);
    triangles.emplace_back(shared[0], leaves);
  }
  if (triangles.empty())
    throw std::invalid_argument("no pendant triangles to relocate");
  if (attach_points.size() < 2)
    throw std::invalid_argument(
        "triangles already share a single attachment vertex");

  auto perron = spectral_radius(g).perron;
  int target = km[0];
  for (int v : km)
    if (perron[v] > perron[target] + kTieMargin) target = v;

  std::vector<Edge> remove, add;
  for (const auto& [attach, leaves] : triangles) {
    if (attach == target) continue;
    for (int leaf : leaves) {
      remove.emplace_back(attach, leaf);
      add.emplace_back(target, leaf);
    }
  }
  return g.rewired(remove, add);
}

Graph merge_blocks_case1(const Graph& g, int v, int l_block, int m_block,
                         int p, int q, int r, int s) {
  auto ct = blocks_and_cut_vertices(g);
  check_heavy_pair_preconditions(ct, v, l_block, m_block);
  auto perron = spectral_radius(g).perron;

  const auto& lb = ct.blocks[l_block];
  const auto& mb = ct.blocks[m_block];
  auto l_rest = by_perron(lb, v, perron);
  check_least_pair(l_rest, p, q, perron);
  auto m_rest = block_without(mb, {v});
  if (r == s || std::find(m_rest.begin(), m_rest.end(), r) == m_rest.end() ||
      std::find(m_rest.begin(), m_rest.end(), s) == m_rest.end())
    throw std::invalid_argument("r and s must be distinct vertices of K_m minus v");
  const double threshold = std::max(perron[p], perron[q]) - kTieMargin;
  if (perron[r] < threshold || perron[s] < threshold)
    throw std::invalid_argument(
        "case 1 needs x_r, x_s >= x_p, x_q; try merge_blocks_case2");

  std::vector<Edge> remove, add;
  for (int u : block_without(lb, {p, q, v})) {
    remove.emplace_back(u, p);
    remove.emplace_back(u, q);
    for (int w : m_rest) add.emplace_back(u, w);
  }
  return g.rewired(remove, add);
}

Graph merge_blocks_case2(const Graph& g, int v, int p, int q, int r, int s) {
  auto ct = blocks_and_cut_vertices(g);
  if (!g.has_edge(v, p) || !g.has_edge(v, r))
    throw std::invalid_argument("v must be adjacent to p and to r");
  const int l_block = find_block_of_edge(ct, v, p);
  const int m_block = find_block_of_edge(ct, v, r);
  if (l_block == m_block)
    throw std::invalid_argument("p and r must lie in different blocks at v");
  check_heavy_pair_preconditions(ct, v, l_block, m_block);
  auto perron = spectral_radius(g).perron;

  const auto& lb = ct.blocks[l_block];
  const auto& mb = ct.blocks[m_block];
  auto l_rest = by_perron(lb, v, perron);
  check_least_pair(l_rest, p, q, perron);

  auto m_rest = block_without(mb, {v});
  if (std::find(m_rest.begin(), m_rest.end(), r) == m_rest.end())
    throw std::invalid_argument("r must lie in K_m minus v");
  if (r == s || std::find(m_rest.begin(), m_rest.end(), s) == m_rest.end())
    throw std::invalid_argument("s must be a vertex of K_m minus {v, r}");
  if (perron[r] < std::max(perron[p], perron[q]) - kTieMargin)
    throw std::invalid_argument("case 2 needs x_r >= x_p, x_q");
  for (int u : m_rest) {
    if (u == r) continue;
    if (perron[u] >= perron[q] - kTieMargin)
      throw std::invalid_argument(
          "case 2 needs every K_m entry besides r strictly below x_q; "
          "try merge_blocks_case1");
  }

  std::vector<Edge> remove, add;
  for (int u : block_without(lb, {p, v})) remove.emplace_back(u, p);
  for (int u : block_without(mb, {s, v})) remove.emplace_back(u, s);
  add.emplace_back(p, s);
  for (int u : block_without(lb, {p, v}))
    for (int w : block_without(mb, {s, v})) add.emplace_back(u, w);
  return g.rewired(remove, add);
}

Graph move_pendant_block(const Graph& g, int block, int from_v, int to_u) {
  auto ct = blocks_and_cut_vertices(g);
  if (block < 0 || block >= ct.block_count())
    throw std::invalid_argument("invalid block id");
  auto cuts = ct.block_cuts(block);
  if (cuts.size() != 1 || cuts[0] != from_v)
    throw std::invalid_argument("block is not pendant at from_v");
  if (to_u == from_v) throw std::invalid_argument("destination equals source");
  const auto& blk = ct.blocks[block];
  if (std::binary_search(blk.begin(), blk.end(), to_u))
    throw std::invalid_argument("destination lies inside the moved block");
  auto perron = spectral_radius(g).perron;
  if (perron[to_u] < perron[from_v] - kTieMargin)
    throw std::invalid_argument("need Perron entry of u >= entry of v");

  std::vector<Edge> remove, add;
  for (int w : block_without(blk, {from_v})) {
    remove.emplace_back(from_v, w);
    add.emplace_back(to_u, w);
  }
  return g.rewired(remove, add);
}

std::optional<MergePlan> find_merge_plan(const Graph&,
                                         const CliqueTreeStructure& ct,
                                         const std::vector<double>& perron) {
  // Pick the cut vertex hosting two blocks of size >= 4, preferring the
  // largest combined size, then the lowest cut vertex.
  MergePlan plan;
  int best_sum = -1;
  for (int v : ct.cut_vertices) {
    std::vector<int> heavy;
    for (int b : ct.blocks_of_vertex[v])
      if (ct.blocks[b].size() >= 4) heavy.push_back(b);
    if (heavy.size() < 2) continue;
    std::sort(heavy.begin(), heavy.end(), [&](int a, int b) {
      if (ct.blocks[a].size() != ct.blocks[b].size())
        return ct.blocks[a].size() > ct.blocks[b].size();
      return a < b;
    });
    int sum = static_cast<int>(ct.blocks[heavy[0]].size() +
                               ct.blocks[heavy[1]].size());
    if (sum > best_sum) {
      best_sum = sum;
      plan.v = v;
      plan.l_block = heavy[0];
      plan.m_block = heavy[1];
    }
  }
  if (best_sum < 0) return std::nullopt;

  // Orient and classify. With p,q the two least entries of one side, count
  // the other side's entries above x_q: >= 2 is case 1, exactly 1 is case 2,
  // 0 means the roles must be swapped (the swap always yields case 1).
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto& lb = ct.blocks[plan.l_block];
    const auto& mb = ct.blocks[plan.m_block];
    auto l_sorted = by_perron(lb, plan.v, perron);
    auto m_sorted = by_perron(mb, plan.v, perron);
    plan.p = l_sorted[0];
    plan.q = l_sorted[1];
    const double threshold = perron[plan.q] - kTieMargin;
    std::vector<int> above;
    for (int w : m_sorted)
      if (perron[w] >= threshold) above.push_back(w);
    if (above.size() >= 2) {
      plan.which_case = 1;
      // The two largest qualifying entries, deterministically.
      plan.r = above[above.size() - 1];
      plan.s = above[above.size() - 2];
      return plan;
    }
    if (above.size() == 1) {
      plan.which_case = 2;
      plan.r = above[0];
      for (int w : m_sorted)
        if (w != plan.r) {
          plan.s = w;
          break;
        }
      return plan;
    }
    std::swap(plan.l_block, plan.m_block);
  }
  throw std::runtime_error("merge classification failed on both orientations");
}

namespace {

// Applies one driver step; returns nullopt at the fixpoint.
std::optional<std::pair<Graph, std::string>> reduction_step(
    const Graph& g, const CliqueTreeStructure& ct) {
  std::vector<int> heavy;
  for (int b = 0; b < ct.block_count(); ++b)
    if (ct.blocks[b].size() >= 4) heavy.push_back(b);
  if (ct.block_count() == 1) return std::nullopt;
  if (ct.cut_vertices.size() == 1 && heavy.size() <= 1) return std::nullopt;

  auto perron = spectral_radius(g).perron;

  if (auto plan = find_merge_plan(g, ct, perron)) {
    Graph out = plan->which_case == 1
                    ? merge_blocks_case1(g, plan->v, plan->l_block,
                                         plan->m_block, plan->p, plan->q,
                                         plan->r, plan->s)
                    : merge_blocks_case2(g, plan->v, plan->p, plan->q, plan->r,
                                         plan->s);
    return std::make_pair(std::move(out),
                          plan->which_case == 1 ? "merge1" : "merge2");
  }

  // Triangle relocation applies when some block sees every other block as a
  // pendant triangle on >= 2 of its vertices.
  for (int b : heavy) {
    bool shape_ok = true;
    std::set<int> attach;
    for (int other = 0; other < ct.block_count() && shape_ok; ++other) {
      if (other == b) continue;
      const auto& blk = ct.blocks[other];
      if (blk.size() != 3) {
        shape_ok = false;
        break;
      }
      int shared = -1, leaves = 0;
      for (int v : blk) {
        if (std::binary_search(ct.blocks[b].begin(), ct.blocks[b].end(), v))
          shared = v;
        else if (ct.block_index[v] == 1)
          ++leaves;
      }
      if (shared == -1 || leaves != 2) shape_ok = false;
      if (shape_ok) attach.insert(shared);
    }
    if (shape_ok && ct.block_count() > 1 && attach.size() >= 2)
      return std::make_pair(relocate_pendant_triangles(g, b), "relocate");
  }

  // Otherwise gather a pendant block at the global Perron maximum (always a
  // cut vertex when the graph has >= 2 blocks).
  int target = 0;
  for (int v = 1; v < g.vertex_count(); ++v)
    if (perron[v] > perron[target] + kTieMargin) target = v;
  int pick = -1;
  for (int b : ct.pendant_blocks()) {
    if (ct.block_cuts(b).front() == target) continue;
    if (pick == -1 || ct.blocks[b].size() > ct.blocks[pick].size() ||
        (ct.blocks[b].size() == ct.blocks[pick].size() &&
         ct.blocks[b] < ct.blocks[pick]))
      pick = b;
  }
  if (pick == -1)
    throw std::runtime_error("no applicable rewrite found before fixpoint");
  Graph out =
      move_pendant_block(g, pick, ct.block_cuts(pick).front(), target);
  return std::make_pair(std::move(out), "move");
}

}  // namespace

Graph reduce_to_extremal(const Graph& g, std::vector<ReductionStep>* trace) {
  if (!is_clique_tree(g, 3))
    throw std::invalid_argument("input is not a clique tree with blocks >= 3");
  Graph cur = g;
  std::set<std::string> visited;
  const int cap = 50 + 10 * g.vertex_count() * g.vertex_count();
  for (int iter = 0; iter < cap; ++iter) {
    auto ct = blocks_and_cut_vertices(cur);
    if (!visited.insert(canonical_form(ct)).second)
      throw std::runtime_error("rewrite sequence revisited a graph");
    auto next = reduction_step(cur, ct);
    if (!next) return cur;
    if (trace) {
      ReductionStep step;
      step.rule = next->second;
      step.rho_before = spectral_radius(cur).rho;
      step.rho_after = spectral_radius(next->first).rho;
      trace->push_back(step);
    }
    cur = std::move(next->first);
  }
  throw std::runtime_error("rewrite sequence did not reach a fixpoint");
}

}  // namespace cliquespec
