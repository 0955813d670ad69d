#include "cliquespec/block_structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cliquespec {

std::vector<int> CliqueTreeStructure::block_cuts(int b) const {
  std::vector<int> out;
  for (int v : blocks[b])
    if (is_cut(v)) out.push_back(v);
  return out;
}

std::vector<int> CliqueTreeStructure::pendant_blocks() const {
  std::vector<int> out;
  if (block_count() < 2) return out;
  for (int b = 0; b < block_count(); ++b)
    if (block_cuts(b).size() == 1) out.push_back(b);
  return out;
}

std::vector<int> CliqueTreeStructure::size_multiset() const {
  std::vector<int> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Iterative Hopcroft-Tarjan: articulation points plus block extraction from
// the DFS edge stack.
struct BlockFinder {
  const Graph& g;
  int n;
  std::vector<int> disc, low, parent, edge_pos;
  std::vector<Edge> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        disc(n, -1),
        low(n, 0),
        parent(n, -1),
        edge_pos(n, 0) {}

  void pop_block(Edge until) {
    std::set<int> verts;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == until) break;
    }
    blocks.emplace_back(verts.begin(), verts.end());
  }

  void run(int root) {
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int u = stack.back();
      auto nb = g.neighbors(u);
      if (edge_pos[u] < static_cast<int>(nb.size())) {
        int v = nb[edge_pos[u]++];
        if (disc[v] == -1) {
          parent[v] = u;
          edge_stack.push_back({u, v});
          disc[v] = low[v] = timer++;
          stack.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          edge_stack.push_back({u, v});
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = parent[u];
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) pop_block({p, u});
        }
      }
    }
  }
};

}  // namespace

CliqueTreeStructure blocks_and_cut_vertices(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (!g.is_connected()) throw std::invalid_argument("graph not connected");

  CliqueTreeStructure ct;
  if (n == 1) {
    ct.blocks = {{0}};
    ct.block_index = {1};
    ct.blocks_of_vertex = {{0}};
    return ct;
  }

  BlockFinder bf(g);
  bf.run(0);
  ct.blocks = std::move(bf.blocks);
  std::sort(ct.blocks.begin(), ct.blocks.end());

  ct.block_index.assign(n, 0);
  ct.blocks_of_vertex.assign(n, {});
  for (int b = 0; b < ct.block_count(); ++b) {
    for (int v : ct.blocks[b]) {
      ++ct.block_index[v];
      ct.blocks_of_vertex[v].push_back(b);
    }
  }
  for (int v = 0; v < n; ++v)
    if (ct.block_index[v] >= 2) ct.cut_vertices.push_back(v);
  return ct;
}

bool is_clique_tree(const Graph& g, int min_block) {
  auto ct = blocks_and_cut_vertices(g);
  for (const auto& blk : ct.blocks) {
    if (static_cast<int>(blk.size()) < min_block) return false;
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j])) return false;
  }
  return true;
}

std::pair<Graph, CliqueTreeStructure> build_clique_tree(const BlockRecipe& r) {
  if (r.sizes.empty()) throw std::invalid_argument("recipe has no blocks");
  if (r.attach.size() + 1 != r.sizes.size())
    throw std::invalid_argument("recipe needs one attachment per block after the first");
  for (int s : r.sizes)
    if (s < 2) throw std::invalid_argument("block size must be at least 2");

  std::vector<std::vector<int>> block_vertices;
  std::vector<Edge> edges;
  int next = 0;

  auto add_complete = [&edges](const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        edges.emplace_back(verts[i], verts[j]);
  };

  std::vector<int> first(r.sizes[0]);
  for (int& v : first) v = next++;
  add_complete(first);
  block_vertices.push_back(first);

  for (std::size_t i = 1; i < r.sizes.size(); ++i) {
    auto [host, pos] = r.attach[i - 1];
    if (host < 0 || host >= static_cast<int>(i))
      throw std::invalid_argument("block " + std::to_string(i) +
                                  " attaches to block " + std::to_string(host) +
                                  " which does not precede it");
    const auto& host_verts = block_vertices[host];
    if (pos < 0 || pos >= static_cast<int>(host_verts.size()))
      throw std::invalid_argument("attachment vertex position " +
                                  std::to_string(pos) + " out of range for block " +
                                  std::to_string(host));
    std::vector<int> verts{host_verts[pos]};
    for (int j = 1; j < r.sizes[i]; ++j) verts.push_back(next++);
    add_complete(verts);
    block_vertices.push_back(verts);
  }

  Graph g(next, edges);
  return {g, blocks_and_cut_vertices(g)};
}

namespace {

// Nodes of the block-cut tree: blocks first, then cut vertices.
struct BcTree {
  int b = 0;  // block count; cut node i is b + i
  std::vector<std::string> label;
  std::vector<std::vector<int>> adj;
};

BcTree bc_tree(const CliqueTreeStructure& ct) {
  BcTree t;
  t.b = ct.block_count();
  int c = static_cast<int>(ct.cut_vertices.size());
  t.label.resize(t.b + c);
  t.adj.resize(t.b + c);
  for (int i = 0; i < t.b; ++i)
    t.label[i] = "B" + std::to_string(ct.blocks[i].size());
  for (int i = 0; i < c; ++i) {
    t.label[t.b + i] = "C";
    for (int blk : ct.blocks_of_vertex[ct.cut_vertices[i]]) {
      t.adj[t.b + i].push_back(blk);
      t.adj[blk].push_back(t.b + i);
    }
  }
  return t;
}

std::string encode_from(const BcTree& t, int root) {
  // Post-order AHU with sorted child encodings.
  struct Frame {
    int node, parent;
    std::size_t child = 0;
    std::vector<std::string> encs;
  };
  std::vector<Frame> stack{{root, -1}};
  std::string result;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.child < t.adj[f.node].size()) {
      int nxt = t.adj[f.node][f.child++];
      if (nxt != f.parent) stack.push_back({nxt, f.node});
    } else {
      std::sort(f.encs.begin(), f.encs.end());
      std::string enc = t.label[f.node] + "(";
      for (const auto& e : f.encs) enc += e;
      enc += ")";
      stack.pop_back();
      if (stack.empty()) {
        result = std::move(enc);
      } else {
        stack.back().encs.push_back(std::move(enc));
      }
    }
  }
  return result;
}

}  // namespace

std::string canonical_form(const CliqueTreeStructure& ct) {
  BcTree t = bc_tree(ct);
  int total = static_cast<int>(t.label.size());
  std::string best;
  for (int root = 0; root < total; ++root) {
    std::string enc = encode_from(t, root);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

std::string canonical_key(const Graph& g) {
  auto ct = blocks_and_cut_vertices(g);
  for (const auto& blk : ct.blocks)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j]))
          throw std::invalid_argument("not a clique tree: block not complete");
  return canonical_form(ct);
}

}  // namespace cliquespec
