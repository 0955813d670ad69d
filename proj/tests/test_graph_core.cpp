#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/enumeration.hpp"
#include "cliquespec/graph.hpp"
#include "test_helpers.hpp"

using namespace cliquespec;
using namespace testutil;

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("without_vertex relabels") {
  Graph g = path(4);
  Graph h = g.without_vertex(1);  // leaves 0 isolated, 2-3 becomes 1-2
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(1, 2));
  CHECK(!h.is_connected());
}

TEST_CASE("two-K4-three-K3 decomposition") {
  // Blocks K4{0,1,2,3}, K4{2,4,5,6}, K3{2,7,8}, K3{0,9,10}, K3{0,11,12}.
  BlockRecipe r{{4, 4, 3, 3, 3}, {{0, 2}, {0, 2}, {0, 0}, {0, 0}}};
  auto [g, ct] = build_clique_tree(r);
  CHECK(g.vertex_count() == 13);
  CHECK(ct.block_count() == 5);
  CHECK(ct.cut_vertices == std::vector<int>{0, 2});
  CHECK(ct.block_index[0] == 3);
  CHECK(ct.block_index[2] == 3);
  CHECK(ct.size_multiset() == std::vector<int>{3, 3, 3, 4, 4});
  CHECK(is_clique_tree(g, 3));
}

TEST_CASE("single clique is its own block") {
  auto ct = blocks_and_cut_vertices(complete(4));
  CHECK(ct.block_count() == 1);
  CHECK(ct.blocks[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(ct.cut_vertices.empty());
}

TEST_CASE("path blocks are its edges") {
  auto ct = blocks_and_cut_vertices(path(3));
  CHECK(ct.block_count() == 2);
  CHECK(ct.cut_vertices == std::vector<int>{1});
  for (const auto& b : ct.blocks) CHECK(b.size() == 2);
}

TEST_CASE("single vertex graph") {
  auto ct = blocks_and_cut_vertices(Graph(1));
  CHECK(ct.block_count() == 1);
  CHECK(ct.cut_vertices.empty());
}

TEST_CASE("disconnected input is rejected") {
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_WITH_AS(blocks_and_cut_vertices(g), "graph not connected",
                       std::invalid_argument);
}

TEST_CASE("clique tree recognition") {
  BlockRecipe fig1{{4, 4, 3, 3, 3}, {{0, 2}, {0, 2}, {0, 0}, {0, 0}}};
  CHECK(is_clique_tree(build_clique_tree(fig1).first, 3));
  CHECK(!is_clique_tree(path(3), 3));
  CHECK(is_clique_tree(path(3), 2));
  CHECK(is_clique_tree(build_extremal(10, 7), 3));
  // Cycle C4: one block of four vertices, not complete.
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(!is_clique_tree(c4, 3));
}

TEST_CASE("build_clique_tree input validation") {
  CHECK_THROWS_AS(build_clique_tree({{3, 3}, {{1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_clique_tree({{3, 3}, {{0, 5}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_clique_tree({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(build_clique_tree({{3, 3}, {}}), std::invalid_argument);
}

TEST_CASE("bowtie from recipe") {
  auto [g, ct] = build_clique_tree({{3, 3}, {{0, 0}}});
  CHECK(g.vertex_count() == 5);
  CHECK(ct.block_count() == 2);
  CHECK(ct.cut_vertices == std::vector<int>{0});
  CHECK(brute_force_isomorphic(g, cliques_at_vertex({3, 3})));
}

TEST_CASE("vertex count identity for clique trees") {
  // n = 1 + sum(|B_i| - 1) whenever every block has >= 3 vertices.
  for (int n = 3; n <= 11; ++n) {
    for (const auto& g : enumerate_clique_trees(n, 3)) {
      auto ct = blocks_and_cut_vertices(g);
      int total = 1;
      for (const auto& b : ct.blocks) total += static_cast<int>(b.size()) - 1;
      CHECK(total == n);
    }
  }
}

TEST_CASE("block-cut tree identity on random connected graphs") {
  // sum_v (bi(v) - 1) == #blocks - 1 for every connected graph.
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 120; ++rep) {
    int n = 2 + static_cast<int>(rng() % 10);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(static_cast<int>(rng() % v), v);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0 &&
            std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end())
          edges.emplace_back(u, v);
    Graph g(n, edges);
    auto ct = blocks_and_cut_vertices(g);
    int lhs = 0;
    for (int v = 0; v < n; ++v) lhs += ct.block_index[v] - 1;
    CHECK(lhs == ct.block_count() - 1);
  }
}

TEST_CASE("canonical form ignores relabeling") {
  std::mt19937_64 rng(2024);
  BlockRecipe fig1{{4, 4, 3, 3, 3}, {{0, 2}, {0, 2}, {0, 0}, {0, 0}}};
  std::vector<Graph> graphs{build_clique_tree(fig1).first,
                            cliques_at_vertex({3, 3}),
                            clique_chain({3, 3, 3}),
                            build_extremal(9, 6)};
  for (const auto& g : graphs) {
    std::string key = canonical_key(g);
    for (int rep = 0; rep < 10; ++rep)
      CHECK(canonical_key(random_relabel(g, rng)) == key);
  }
}

TEST_CASE("canonical form separates non-isomorphic clique trees") {
  CHECK(canonical_key(cliques_at_vertex({3, 4})) !=
        canonical_key(cliques_at_vertex({3, 3})));
  // Chain of three triangles vs star of three triangles.
  CHECK(canonical_key(clique_chain({3, 3, 3})) !=
        canonical_key(cliques_at_vertex({3, 3, 3})));
  CHECK(brute_force_isomorphic(clique_chain({3, 3, 3}),
                               cliques_at_vertex({3, 3, 3})) == false);
}

TEST_CASE("canonical equality agrees with brute-force isomorphism up to n=8") {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 8; ++n) {
    auto classes = enumerate_clique_trees(n, 3);
    std::vector<std::string> keys;
    for (const auto& g : classes) keys.push_back(canonical_key(g));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      // Same class, relabeled: equal keys and isomorphic.
      Graph shuffled = random_relabel(classes[i], rng);
      CHECK(canonical_key(shuffled) == keys[i]);
      CHECK(brute_force_isomorphic(classes[i], shuffled));
      // Distinct classes: different keys and not isomorphic.
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        CHECK(keys[i] != keys[j]);
        CHECK(!brute_force_isomorphic(classes[i], classes[j]));
      }
    }
  }
}

TEST_CASE("canonical form rejects non-clique-trees") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_THROWS_AS(canonical_key(c4), std::invalid_argument);
}
