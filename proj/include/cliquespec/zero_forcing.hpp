#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/graph.hpp"

namespace cliquespec {

// Result of running the color-change rule to a fixpoint. The trace records
// forces in the order applied; blue is the final set, sorted.
struct ForcingState {
  std::vector<int> blue;
  std::vector<std::pair<int, int>> trace;  // (u forces v)

  bool all_blue(const Graph& g) const {
    return static_cast<int>(blue.size()) == g.vertex_count();
  }
};

// Repeatedly applies the color-change rule until no force is possible.
// The final blue set is order-independent; the trace uses a fixed scan
// (ascending labels, round after round) so runs are reproducible.
ForcingState forcing_closure(const Graph& g, std::span<const int> seed);

bool is_zero_forcing_set(const Graph& g, std::span<const int> s);

struct ZeroForcingResult {
  int z = 0;
  std::vector<int> witness;  // lexicographically least minimum set
};

// Exact Z(G) by subset search, ascending by size, subsets of each size in
// lexicographic order. Throws when vertex count exceeds cap.
ZeroForcingResult zero_forcing_number_exhaustive(const Graph& g, int cap = 16);

// Z(G) = sum_i (|B_i| - 1) - sum_v (bi(v) - 1) = n - b for clique trees
// whose blocks all have size >= 3. Throws on smaller blocks.
int zero_forcing_number_formula(const CliqueTreeStructure& ct);

// Builds g1 with a fresh K_m glued at v and checks, by exhaustive search on
// both sides, that Z(g1 + K_m) = Z(g1) + Z(K_m) - 1.
bool pendant_reduction_check(const Graph& g1, int v, int m, int cap = 16);

// Attainable zero forcing numbers over clique trees with blocks >= 3 on n
// vertices: (floor(n/2)+1, n-1). Throws for n < 3.
std::pair<int, int> valid_k_range(int n);

}  // namespace cliquespec
