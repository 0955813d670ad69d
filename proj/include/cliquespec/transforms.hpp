#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/graph.hpp"

namespace cliquespec {

// Spectral-radius-increasing rewrites on clique trees. Every rewrite returns
// a new graph (inputs are never mutated), preserves the vertex count and the
// zero forcing number, and its Perron-entry preconditions are validated
// against the input graph's computed Perron vector. Ties between Perron
// entries (within 1e-9) are broken toward the lower vertex label.

// Reattaches every pendant triangle to the K_m vertex with the largest
// Perron entry. Requires the graph to consist of the named block plus
// pendant triangles hanging from at least two distinct vertices of it.
Graph relocate_pendant_triangles(const Graph& g, int km_block);

// Shrinks K_l # K_m at cut vertex v (l, m >= 4) to K_3 # K_{l+m-3} by
// deleting the edges from K_l \ {p,q,v} to p and q and joining
// K_l \ {p,q,v} completely to K_m \ {v}. p, q must be the two smallest
// Perron entries of K_l \ {v} and r, s two vertices of K_m \ {v} with
// entries >= both.
Graph merge_blocks_case1(const Graph& g, int v, int l_block, int m_block,
                         int p, int q, int r, int s);

// The companion rewrite for the remaining Perron ordering: r is the only
// vertex of K_m \ {v} with entry >= x_q and every other entry is strictly
// below x_q; s is one such vertex. Isolates p and s into a new triangle
// {v,p,s} and joins the rest into K_{l+m-3}. Blocks are inferred from the
// edges v~p (K_l side) and v~r (K_m side).
Graph merge_blocks_case2(const Graph& g, int v, int p, int q, int r, int s);

// Reattaches a pendant block from its cut vertex to another vertex u with
// Perron entry >= the cut vertex's entry.
Graph move_pendant_block(const Graph& g, int block, int from_v, int to_u);

struct ReductionStep {
  std::string rule;  // "merge1", "merge2", "relocate", "move"
  double rho_before = 0.0;
  double rho_after = 0.0;
};

// Replays the rewrites to a fixpoint: merges first (largest block pairs),
// then triangle relocations, then pendant-block moves toward the global
// Perron maximum. Ends at the one-cut-vertex graph with at most one block
// of size >= 4, which is the extremal graph of its (n, Z) class.
Graph reduce_to_extremal(const Graph& g,
                         std::vector<ReductionStep>* trace = nullptr);

struct MergePlan {
  int which_case = 0;
  int v = -1, l_block = -1, m_block = -1;
  int p = -1, q = -1, r = -1, s = -1;
};

// Finds a cut vertex carrying two blocks of size >= 4 and classifies which
// merge applies there, or nullopt when no such pair exists.
std::optional<MergePlan> find_merge_plan(const Graph& g,
                                         const CliqueTreeStructure& ct,
                                         const std::vector<double>& perron);

}  // namespace cliquespec
