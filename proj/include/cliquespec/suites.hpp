#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool pass() const { return instances > 0 && failures == 0; }
};

// Random connected graph: spanning tree plus each remaining pair with
// probability edge_prob.
Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng);

// Random clique tree with every block of size >= min_block, exactly n
// vertices.
Graph random_clique_tree(int n, int min_block, std::mt19937_64& rng);

// Adding any missing edge to a connected graph strictly raises the spectral
// radius (checked with the stated margin) on `instances` random graphs.
SuiteResult edge_addition_suite(int instances, int nmax, std::uint64_t seed,
                                double margin = 1e-9);

// On every enumerated clique tree with a pendant block (n up to nmax): the
// pendant cut vertex carries a strictly larger Perron entry than its leaves,
// and the leaf entries agree.
SuiteResult pendant_perron_suite(int nmax, int enum_cap = 14);

// Randomized triangle relocations and block merges: spectral radius strictly
// increases, the zero forcing number and vertex count are preserved, and a
// merged pair (l, m) reappears as (3, l+m-3).
SuiteResult rewrite_suite(int instances, int nmax, std::uint64_t seed,
                          double margin = 1e-9);

// Replays the rewrites to a fixpoint from every class member with n <= nmax
// and checks it lands on the canonical extremal graph.
SuiteResult reduction_replay_suite(int nmax, int enum_cap = 14);

}  // namespace cliquespec
