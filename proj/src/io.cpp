#include "cliquespec/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cliquespec {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void parse_fail(const std::string& origin, int line,
                             const std::string& what) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_edge_list(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw std::runtime_error(origin + ": missing header");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0)
    parse_fail(origin, lineno, "header must be two nonnegative integers 'n m'");

  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line())
      parse_fail(origin, lineno, "expected " + std::to_string(m) +
                                     " edges, found " + std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      parse_fail(origin, lineno, "edge line must be two integers 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(origin, lineno, "vertex index out of range [0," +
                                     std::to_string(n) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) parse_fail(origin, lineno, "trailing content after edges");

  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(origin + ": " + e.what());
  }
}

Graph load_graph(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path), path.string());
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_edge_list(g);
}

BlockRecipe parse_recipe_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("recipe: ") + e.what());
  }
  if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
    throw std::runtime_error("recipe: expected object with a 'blocks' array");
  BlockRecipe r;
  for (const auto& s : j["blocks"]) r.sizes.push_back(s.get<int>());
  if (j.contains("attach")) {
    for (const auto& a : j["attach"]) {
      if (!a.is_array() || a.size() != 2)
        throw std::runtime_error("recipe: attach entries must be [block,vertex]");
      r.attach.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
  }
  return r;
}

Graph load_recipe(const std::filesystem::path& path) {
  auto recipe = parse_recipe_json(read_file(path));
  return build_clique_tree(recipe).first;
}

std::string format_recipe_json(const BlockRecipe& r) {
  nlohmann::json j;
  j["blocks"] = r.sizes;
  auto attach = nlohmann::json::array();
  for (const auto& [b, v] : r.attach) attach.push_back({b, v});
  j["attach"] = attach;
  return j.dump();
}

}  // namespace cliquespec
