#include "cliquespec/suites.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/enumeration.hpp"
#include "cliquespec/spectral.hpp"
#include "cliquespec/transforms.hpp"
#include "cliquespec/zero_forcing.hpp"

namespace cliquespec {

namespace {

void note_failure(SuiteResult& res, const std::string& what) {
  ++res.failures;
  if (res.notes.size() < 5) res.notes.push_back(what);
}

}  // namespace

Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<Edge> edges;
  // Random spanning tree: attach each new vertex to a uniform earlier one.
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  std::set<Edge> have(edges.begin(), edges.end());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have.count({u, v}) && coin(rng) < edge_prob)
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_clique_tree(int n, int min_block, std::mt19937_64& rng) {
  if (n < min_block) throw std::invalid_argument("n below minimum block size");
  auto feasible = [&](int used, int size) {
    int rest = n - used - (size - 1);
    return rest == 0 || rest >= min_block - 1;
  };

  std::vector<Edge> edges;
  std::vector<int> sizes_first;
  for (int t = min_block; t <= n; ++t)
    if (n - t == 0 || n - t >= min_block - 1) sizes_first.push_back(t);
  std::uniform_int_distribution<std::size_t> pick_first(0, sizes_first.size() - 1);
  int first = sizes_first[pick_first(rng)];
  for (int i = 0; i < first; ++i)
    for (int j = i + 1; j < first; ++j) edges.emplace_back(i, j);
  int used = first;

  while (used < n) {
    std::vector<int> sizes;
    for (int t = min_block; used + t - 1 <= n; ++t)
      if (feasible(used, t)) sizes.push_back(t);
    std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
    int t = sizes[pick_size(rng)];
    std::uniform_int_distribution<int> pick_vertex(0, used - 1);
    int host = pick_vertex(rng);
    for (int j = 0; j < t - 1; ++j) {
      edges.emplace_back(host, used + j);
      for (int l = j + 1; l < t - 1; ++l)
        edges.emplace_back(used + j, used + l);
    }
    used += t - 1;
  }
  return Graph(n, edges);
}

SuiteResult edge_addition_suite(int instances, int nmax, std::uint64_t seed,
                                double margin) {
  SuiteResult res;
  res.name = "edge_addition_monotonicity";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(3, nmax);
  std::uniform_real_distribution<double> pick_p(0.1, 0.7);
  while (res.instances < instances) {
    int n = pick_n(rng);
    Graph g = random_connected_graph(n, pick_p(rng), rng);
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) missing.emplace_back(u, v);
    if (missing.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
    auto [u, v] = missing[pick(rng)];
    double before = spectral_radius(g).rho;
    double after = spectral_radius(g.with_edge(u, v)).rho;
    ++res.instances;
    if (after - before <= margin)
      note_failure(res, "rho gain " + std::to_string(after - before) +
                            " too small on n=" + std::to_string(n));
  }
  return res;
}

SuiteResult pendant_perron_suite(int nmax, int enum_cap) {
  SuiteResult res;
  res.name = "pendant_perron_structure";
  for (int n = 3; n <= nmax; ++n) {
    for (const auto& g : enumerate_clique_trees(n, 3, enum_cap)) {
      auto ct = blocks_and_cut_vertices(g);
      if (ct.pendant_blocks().empty()) continue;
      ++res.instances;
      if (!perron_pendant_check(g, ct))
        note_failure(res, "pendant ordering violated at n=" + std::to_string(n));
    }
  }
  return res;
}

namespace {

// Random instance for the relocation rewrite: one K_m plus pendant triangles
// spread over at least two of its vertices.
Graph random_relocation_instance(int nmax, std::mt19937_64& rng, int& block_id) {
  std::uniform_int_distribution<int> pick_m(3, 6);
  int m = pick_m(rng);
  int budget = (nmax - m) / 2;  // each triangle adds 2 vertices
  if (budget < 2) throw std::invalid_argument("nmax too small for relocation");
  std::uniform_int_distribution<int> pick_t(2, budget);
  int triangles = pick_t(rng);

  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  // Attachment vertices: ensure at least two distinct ones.
  std::vector<int> attach(triangles);
  std::uniform_int_distribution<int> pick_v(0, m - 1);
  do {
    for (int& a : attach) a = pick_v(rng);
  } while (std::set<int>(attach.begin(), attach.end()).size() < 2);
  int next = m;
  for (int a : attach) {
    edges.emplace_back(a, next);
    edges.emplace_back(a, next + 1);
    edges.emplace_back(next, next + 1);
    next += 2;
  }
  Graph g(next, edges);
  // The K_m block is the unique block of size m among the blocks; when m == 3
  // it is the one whose vertices all lie in 0..m-1.
  auto ct = blocks_and_cut_vertices(g);
  block_id = -1;
  for (int b = 0; b < ct.block_count(); ++b)
    if (ct.blocks[b].back() < m) block_id = b;
  return g;
}

// Random clique tree containing K_l and K_m (both >= 4) at a shared cut
// vertex, padded with extra triangles elsewhere.
Graph random_merge_instance(int nmax, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_l(4, 6), pick_m(4, 6);
  int l = pick_l(rng), m = pick_m(rng);
  while (l + m - 1 > nmax) {
    l = pick_l(rng);
    m = pick_m(rng);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) edges.emplace_back(i, j);
  int next = l;
  // K_m glued at vertex 0
  std::vector<int> mblock{0};
  for (int j = 0; j < m - 1; ++j) mblock.push_back(next++);
  for (std::size_t i = 0; i < mblock.size(); ++i)
    for (std::size_t j = i + 1; j < mblock.size(); ++j)
      edges.emplace_back(mblock[i], mblock[j]);
  // Optional extra pendant triangles anywhere, budget permitting.
  std::uniform_int_distribution<int> extra_count(0, (nmax - next) / 2);
  int extras = extra_count(rng);
  for (int e = 0; e < extras; ++e) {
    std::uniform_int_distribution<int> pick_v(0, next - 1);
    int host = pick_v(rng);
    edges.emplace_back(host, next);
    edges.emplace_back(host, next + 1);
    edges.emplace_back(next, next + 1);
    next += 2;
  }
  return Graph(next, edges);
}

}  // namespace

SuiteResult rewrite_suite(int instances, int nmax, std::uint64_t seed,
                          double margin) {
  SuiteResult res;
  res.name = "rewrite_monotonicity";
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution relocate_coin(0.4);
  while (res.instances < instances) {
    bool do_relocate = relocate_coin(rng);
    Graph g = Graph(1);
    std::string rule;
    Graph out = Graph(1);
    int km_block = -1;
    try {
      if (do_relocate) {
        g = random_relocation_instance(nmax, rng, km_block);
        rule = "relocate";
        out = relocate_pendant_triangles(g, km_block);
      } else {
        g = random_merge_instance(nmax, rng);
        auto ct = blocks_and_cut_vertices(g);
        auto perron = spectral_radius(g).perron;
        auto plan = find_merge_plan(g, ct, perron);
        if (!plan) continue;
        rule = plan->which_case == 1 ? "merge1" : "merge2";
        out = plan->which_case == 1
                  ? merge_blocks_case1(g, plan->v, plan->l_block,
                                       plan->m_block, plan->p, plan->q,
                                       plan->r, plan->s)
                  : merge_blocks_case2(g, plan->v, plan->p, plan->q, plan->r,
                                       plan->s);
      }
    } catch (const std::exception& e) {
      // The generators construct instances meeting the preconditions, so any
      // rejection here is a defect worth reporting.
      ++res.instances;
      note_failure(res, rule.empty() ? e.what() : rule + ": " + e.what());
      continue;
    }
    ++res.instances;

    double gain = spectral_radius(out).rho - spectral_radius(g).rho;
    if (gain <= margin)
      note_failure(res, rule + ": rho gain " + std::to_string(gain));

    auto ct_before = blocks_and_cut_vertices(g);
    auto ct_after = blocks_and_cut_vertices(out);
    if (out.vertex_count() != g.vertex_count())
      note_failure(res, rule + ": vertex count changed");
    if (!is_clique_tree(out, 3))
      note_failure(res, rule + ": output not a clique tree with blocks >= 3");
    if (zero_forcing_number_formula(ct_before) !=
        zero_forcing_number_formula(ct_after))
      note_failure(res, rule + ": zero forcing number changed");

    if (rule == "relocate") {
      if (ct_before.size_multiset() != ct_after.size_multiset())
        note_failure(res, "relocate: block multiset changed");
    } else {
      // (l, m) must reappear as (3, l+m-3); everything else is untouched.
      auto before = ct_before.size_multiset();
      auto after = ct_after.size_multiset();
      std::multiset<int> b(before.begin(), before.end());
      std::multiset<int> a(after.begin(), after.end());
      bool found = false;
      for (int l = 4; !found && l <= 16; ++l) {
        for (int m = l; !found && m <= 16; ++m) {
          auto bb = b;
          if (!bb.count(l)) continue;
          bb.erase(bb.find(l));
          if (!bb.count(m)) continue;
          bb.erase(bb.find(m));
          bb.insert(3);
          bb.insert(l + m - 3);
          if (bb == a) found = true;
        }
      }
      if (!found) note_failure(res, rule + ": block multiset not (3, l+m-3)");
    }
  }
  return res;
}

SuiteResult reduction_replay_suite(int nmax, int enum_cap) {
  SuiteResult res;
  res.name = "reduction_replay";
  for (int n = 3; n <= nmax; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= hi; ++k) {
      std::string target = canonical_key(build_extremal(n, k));
      for (const auto& g : class_G(n, k, enum_cap)) {
        ++res.instances;
        try {
          Graph reduced = reduce_to_extremal(g);
          if (canonical_key(reduced) != target)
            note_failure(res, "n=" + std::to_string(n) + " k=" +
                                  std::to_string(k) + ": wrong fixpoint");
        } catch (const std::exception& e) {
          note_failure(res, "n=" + std::to_string(n) + " k=" +
                                std::to_string(k) + ": " + e.what());
        }
      }
    }
  }
  return res;
}

}  // namespace cliquespec
