#include "cliquespec/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cliquespec {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.resize(n);
  finish();
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.resize(n);
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  finish();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

void Graph::finish() {
  for (int v = 0; v < n_; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge at vertex " +
                                  std::to_string(v));
  }
  if (n_ <= 64) {
    mask_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v]) mask_[v] |= std::uint64_t{1} << w;
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (n_ <= 64) return (mask_[u] >> v) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges();
  es.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(n_, es);
}

Graph Graph::rewired(const std::vector<Edge>& remove,
                     const std::vector<Edge>& add) const {
  auto norm = [](Edge e) {
    return Edge{std::min(e.first, e.second), std::max(e.first, e.second)};
  };
  auto es = edges();
  for (Edge e : remove) {
    auto it = std::find(es.begin(), es.end(), norm(e));
    if (it == es.end())
      throw std::invalid_argument("cannot remove absent edge (" +
                                  std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    es.erase(it);
  }
  for (Edge e : add) es.push_back(norm(e));
  return Graph(n_, es);
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  std::vector<Edge> es;
  for (const auto& [a, b] : edges()) {
    if (a == v || b == v) continue;
    es.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph(n_ - 1, es);
}

}  // namespace cliquespec
