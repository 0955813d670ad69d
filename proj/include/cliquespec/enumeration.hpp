#pragma once

#include <string>
#include <vector>

#include "cliquespec/graph.hpp"

namespace cliquespec {

// Verdict for one (n, k) class: does the canonical extremal graph uniquely
// maximize the spectral radius over every isomorphism class in the family?
struct ExtremalReport {
  int n = 0, k = 0;
  int class_size = 0;
  double max_rho = 0.0;
  double runner_up_rho = 0.0;  // meaningful iff class_size >= 2
  std::string argmax_canonical;
  bool unique = false;
  bool matches_extremal = false;
};

// Every isomorphism class of clique trees on n vertices whose blocks all
// have at least min_block vertices, built by attaching pendant blocks and
// deduplicating on canonical keys. Output sorted by canonical key. Throws
// when n exceeds cap (refuses rather than truncating).
std::vector<Graph> enumerate_clique_trees(int n, int min_block = 3,
                                          int cap = 14);

// The classes with zero forcing number k (equivalently n - k blocks);
// every emitted graph is re-checked against the closed formula.
std::vector<Graph> class_G(int n, int k, int cap = 14);

// One K_{2k-n+2} block plus n-k-1 triangles sharing vertex 0. Vertex layout:
// the large block is 0..2k-n+1 and triangle i occupies {0, 2k-n+2i,
// 2k-n+2i+1} for i = 1..n-k-1.
Graph build_extremal(int n, int k);

// The coarse vertex partition of build_extremal(n, k): large block minus the
// center, the center, and all triangle leaves. Two parts when k = n-1 (no
// triangles).
std::vector<std::vector<int>> extremal_partition(int n, int k);

ExtremalReport verify_main_theorem(int n, int k, double tol = 1e-12,
                                   int cap = 14);

// Range of attained zero forcing numbers over the enumerated classes, with
// the block multiset of the minimizers.
struct RemarkCheck {
  int n = 0;
  int min_z = 0, max_z = 0;
  bool range_matches = false;    // (floor(n/2)+1, n-1)
  std::vector<int> min_z_blocks;  // block size multiset of a Z-minimizer
  int min_z_class_count = 0;
  int triangle_count = 0;  // triangles in the minimizer multiset
  bool minimizer_matches = false;
};

RemarkCheck verify_remark_range(int n, int cap = 14);

}  // namespace cliquespec
