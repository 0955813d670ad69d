#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquespec {

using Edge = std::pair<int, int>;

// Simple undirected graph on dense vertex labels 0..n-1.
// Immutable after construction: no self-loops, no parallel edges, both
// endpoints in range (construction throws otherwise). Connectivity is not
// an invariant; operations that need it say so.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const int> neighbors(int v) const { return adj_[v]; }

  // All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  Graph with_edge(int u, int v) const;

  // New graph with `remove` deleted and `add` inserted, in that order.
  Graph rewired(const std::vector<Edge>& remove,
                const std::vector<Edge>& add) const;

  // Deletes v and shifts labels above v down by one.
  Graph without_vertex(int v) const;

  // Neighbor bitmask; only valid when vertex_count() <= 64.
  std::uint64_t neighbor_mask(int v) const { return mask_[v]; }
  bool has_masks() const { return n_ <= 64; }

 private:
  void check_vertex(int v) const;
  void finish();  // sorts adjacency, builds masks

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> mask_;
};

}  // namespace cliquespec
