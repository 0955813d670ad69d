#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

// Block decomposition of a connected graph: maximal 2-connected subgraphs
// (a bridge edge is a block of size 2, an isolated vertex its own block),
// the cut vertices, and the block-cut incidence.
struct CliqueTreeStructure {
  // Sorted vertex lists, ordered lexicographically among blocks.
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;  // sorted
  // block_index[v] = number of blocks containing v (>= 2 iff cut vertex).
  std::vector<int> block_index;
  std::vector<std::vector<int>> blocks_of_vertex;

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_cut(int v) const { return block_index[v] >= 2; }

  // Cut vertices of one block, ascending.
  std::vector<int> block_cuts(int b) const;

  // Blocks containing exactly one cut vertex. Empty for a single block.
  std::vector<int> pendant_blocks() const;

  // Block sizes as a sorted multiset.
  std::vector<int> size_multiset() const;
};

// Throws std::invalid_argument("graph not connected") on disconnected input.
CliqueTreeStructure blocks_and_cut_vertices(const Graph& g);

// True iff g is connected, every block induces a complete subgraph, and
// every block has at least min_block vertices.
bool is_clique_tree(const Graph& g, int min_block);

// Construction recipe: block 0 has sizes[0] fresh vertices; block i >= 1
// attaches at attach[i-1] = (host block index < i, vertex position within
// that host block's creation order) and adds sizes[i]-1 fresh vertices.
struct BlockRecipe {
  std::vector<int> sizes;
  std::vector<std::pair<int, int>> attach;
};

std::pair<Graph, CliqueTreeStructure> build_clique_tree(const BlockRecipe& r);

// Canonical key for clique-tree isomorphism: an AHU-style encoding of the
// block-cut tree decorated with block sizes, minimized over all roots.
// Two clique trees get equal keys iff they are isomorphic.
std::string canonical_form(const CliqueTreeStructure& ct);

// Decomposes, checks every block is complete, and returns the canonical key.
std::string canonical_key(const Graph& g);

}  // namespace cliquespec
