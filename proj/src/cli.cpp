#include "cliquespec/cli.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquespec/block_structure.hpp"
#include "cliquespec/config.hpp"
#include "cliquespec/enumeration.hpp"
#include "cliquespec/graph.hpp"
#include "cliquespec/io.hpp"
#include "cliquespec/spectral.hpp"
#include "cliquespec/suites.hpp"
#include "cliquespec/transforms.hpp"
#include "cliquespec/zero_forcing.hpp"

namespace cliquespec {

namespace {

using nlohmann::json;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::vector<int>> parse_partition(const std::string& text) {
  std::vector<std::vector<int>> parts;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) parts.push_back(parse_int_list(group));
  return parts;
}

Graph load_input(const std::string& graph_path, const std::string& recipe_path) {
  if (graph_path.empty() == recipe_path.empty())
    throw std::runtime_error("provide exactly one of a graph file or --recipe");
  if (!recipe_path.empty()) return load_recipe(recipe_path);
  return load_graph(graph_path);
}

json block_summary(const Graph& g) {
  auto ct = blocks_and_cut_vertices(g);
  json j;
  j["blocks"] = ct.size_multiset();
  j["b"] = ct.block_count();
  j["cut_vertices"] = ct.cut_vertices;
  return j;
}

json report_json(const ExtremalReport& rep) {
  json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["class_size"] = rep.class_size;
  j["max_rho"] = rep.max_rho;
  if (std::isnan(rep.runner_up_rho))
    j["runner_up_rho"] = nullptr;
  else
    j["runner_up_rho"] = rep.runner_up_rho;
  j["argmax_canonical"] = rep.argmax_canonical;
  j["unique"] = rep.unique;
  j["matches_extremal"] = rep.matches_extremal;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string csv_line(const ExtremalReport& rep) {
  std::ostringstream ss;
  ss << rep.n << ',' << rep.k << ',' << rep.class_size << ','
     << std::setprecision(12) << rep.max_rho << ','
     << (rep.unique ? "true" : "false") << ','
     << (rep.matches_extremal ? "true" : "false");
  return ss.str();
}

int sweep(int nmin, int nmax, const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<int, int>> jobs;
  for (int n = std::max(3, nmin); n <= nmax; ++n) {
    auto [lo, hi] = valid_k_range(n);
    for (int k = lo; k <= hi; ++k) jobs.emplace_back(n, k);
  }
  std::vector<ExtremalReport> reports(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<std::size_t> cursor{0};
  int workers = cfg.jobs > 0
                    ? cfg.jobs
                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));

  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= jobs.size()) return;
      auto [n, k] = jobs[i];
      try {
        reports[i] = verify_main_theorem(n, k, cfg.tolerance, cfg.enum_cap);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::filesystem::create_directories(cfg.output_dir);
  std::ostringstream csv;
  csv << "n,k,class_size,max_rho,unique,matches\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [n, k] = jobs[i];
    if (!errors[i].empty()) {
      out << n << "," << k << ": error: " << errors[i] << "\n";
      all_ok = false;
      continue;
    }
    const auto& rep = reports[i];
    write_text(std::filesystem::path(cfg.output_dir) /
                   (std::to_string(n) + "_" + std::to_string(k) + ".json"),
               report_json(rep).dump(2) + "\n");
    csv << csv_line(rep) << '\n';
    if (!rep.unique || !rep.matches_extremal) all_ok = false;
  }
  write_text(std::filesystem::path(cfg.output_dir) / "summary.csv", csv.str());
  out << csv.str();
  return all_ok ? 0 : 1;
}

json suite_json(const SuiteResult& r) {
  json j;
  j["name"] = r.name;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["pass"] = r.pass();
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Zero forcing and spectral-radius toolkit for clique trees"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tolerance, "Eigensolver residual tolerance")
      ->envname("CLIQUESPEC_TOL");
  app.add_option("--cap", cfg.exhaustive_cap, "Exhaustive search vertex cap")
      ->envname("CLIQUESPEC_CAP");
  app.add_option("--enum-cap", cfg.enum_cap, "Enumeration vertex cap")
      ->envname("CLIQUESPEC_ENUM_CAP");
  app.add_option("--out", cfg.output_dir, "Results directory")
      ->envname("CLIQUESPEC_OUT");
  app.add_option("--format", cfg.format, "Output format: json or csv")
      ->envname("CLIQUESPEC_FORMAT");
  app.add_option("--seed", cfg.seed, "Seed for randomized suites")
      ->envname("CLIQUESPEC_SEED");
  app.add_option("--jobs", cfg.jobs, "Worker count (0 = hardware)")
      ->envname("CLIQUESPEC_JOBS");

  int exit_code = 0;

  // ---- zf ----
  auto* zf = app.add_subcommand("zf", "Zero forcing computations");
  zf->require_subcommand(1);

  std::string zf_graph, zf_recipe, zf_seed;
  auto add_input = [&](CLI::App* cmd, std::string& path, std::string& recipe) {
    cmd->add_option("graph", path, "Edge-list file");
    cmd->add_option("--recipe", recipe, "Clique-tree build recipe (JSON)");
  };

  auto* zf_exact = zf->add_subcommand("exact", "Exact Z by subset search");
  add_input(zf_exact, zf_graph, zf_recipe);
  zf_exact->callback([&]() {
    Graph g = load_input(zf_graph, zf_recipe);
    auto res = zero_forcing_number_exhaustive(g, cfg.exhaustive_cap);
    json j;
    j["Z"] = res.z;
    j["witness"] = res.witness;
    j["n"] = g.vertex_count();
    out << j.dump() << "\n";
  });

  auto* zf_formula = zf->add_subcommand("formula", "Z by the clique-tree formula");
  add_input(zf_formula, zf_graph, zf_recipe);
  zf_formula->callback([&]() {
    Graph g = load_input(zf_graph, zf_recipe);
    auto ct = blocks_and_cut_vertices(g);
    json j;
    j["Z"] = zero_forcing_number_formula(ct);
    j["b"] = ct.block_count();
    j["n"] = g.vertex_count();
    out << j.dump() << "\n";
  });

  auto* zf_closure = zf->add_subcommand("closure", "Color-change closure of a seed");
  add_input(zf_closure, zf_graph, zf_recipe);
  zf_closure->add_option("--seed", zf_seed, "Comma-separated seed vertices")
      ->required();
  zf_closure->callback([&]() {
    Graph g = load_input(zf_graph, zf_recipe);
    auto seed = parse_int_list(zf_seed);
    auto st = forcing_closure(g, seed);
    json j;
    j["seed"] = seed;
    j["blue"] = st.blue;
    j["complete"] = st.all_blue(g);
    auto trace = json::array();
    for (auto [u, v] : st.trace) trace.push_back({u, v});
    j["trace"] = trace;
    out << j.dump() << "\n";
  });

  // ---- spec ----
  auto* sp = app.add_subcommand("spec", "Spectral computations");
  sp->require_subcommand(1);
  std::string sp_graph, sp_recipe, sp_partition;
  int sp_n = 0, sp_k = 0;

  auto* sp_rho = sp->add_subcommand("rho", "Spectral radius and Perron vector");
  add_input(sp_rho, sp_graph, sp_recipe);
  sp_rho->callback([&]() {
    Graph g = load_input(sp_graph, sp_recipe);
    auto res = spectral_radius(g, cfg.tolerance);
    json j;
    j["n"] = g.vertex_count();
    j["rho"] = res.rho;
    j["residual"] = res.residual;
    j["iterations"] = res.iterations;
    j["dense_fallback"] = res.dense_fallback;
    j["perron"] = res.perron;
    out << j.dump() << "\n";
  });

  auto* sp_quot = sp->add_subcommand("quotient", "Quotient matrix of a partition");
  add_input(sp_quot, sp_graph, sp_recipe);
  sp_quot->add_option("--partition", sp_partition,
                      "Parts as comma lists joined by ';', e.g. 1,2;0;3,4")
      ->required();
  sp_quot->callback([&]() {
    Graph g = load_input(sp_graph, sp_recipe);
    auto qm = quotient_matrix(g, parse_partition(sp_partition));
    json j;
    j["partition"] = qm.partition;
    j["q"] = qm.q;
    j["equitable"] = qm.equitable;
    j["rho_q"] = quotient_spectral_radius(qm);
    out << j.dump() << "\n";
  });

  auto* sp_fpoly = sp->add_subcommand("fpoly", "Quotient cubic of the extremal graph");
  sp_fpoly->add_option("n", sp_n)->required();
  sp_fpoly->add_option("k", sp_k)->required();
  sp_fpoly->callback([&]() {
    Cubic c = extremal_cubic(sp_n, sp_k);
    json j;
    j["coeffs"] = {1.0, c.c2, c.c1, c.c0};
    j["largest_root"] = cubic_largest_root(c);
    out << j.dump() << "\n";
  });

  auto* sp_gpoly = sp->add_subcommand(
      "gpoly", "Factored characteristic polynomial of the extremal graph");
  sp_gpoly->add_option("n", sp_n)->required();
  sp_gpoly->add_option("k", sp_k)->required();
  sp_gpoly->callback([&]() {
    auto fac = char_poly_extremal(sp_n, sp_k);
    json j;
    j["x_minus_1_exp"] = fac.mult_plus_one;
    j["x_plus_1_exp"] = fac.mult_minus_one;
    j["cubic"] = {1.0, fac.f.c2, fac.f.c1, fac.f.c0};
    out << j.dump() << "\n";
  });

  auto* sp_bounds = sp->add_subcommand("bounds", "Spectral radius bounds");
  sp_bounds->add_option("n", sp_n)->required();
  sp_bounds->add_option("k", sp_k)->required();
  sp_bounds->callback([&]() {
    auto ub = extremal_upper_bound(sp_n, sp_k);
    json j;
    j["n"] = sp_n;
    j["k"] = sp_k;
    j["a"] = ub.params.a;
    j["b"] = ub.params.b;
    j["alpha"] = ub.params.alpha;
    j["beta"] = ub.params.beta;
    j["lower"] = extremal_lower_bound(sp_n, sp_k);
    j["rho"] = cubic_largest_root(extremal_cubic(sp_n, sp_k));
    j["case"] = ub.which_case;
    j["applicable"] = ub.applicable;
    if (ub.applicable)
      j["upper"] = ub.value;
    else
      j["upper"] = nullptr;
    out << j.dump() << "\n";
  });

  // ---- transform ----
  auto* tr = app.add_subcommand("transform", "Graph rewrites");
  tr->require_subcommand(1);
  auto* tr_apply = tr->add_subcommand("apply", "Apply one rewrite rule");
  std::string tr_rule, tr_input, tr_recipe;
  int tr_v = -1, tr_p = -1, tr_q = -1, tr_r = -1, tr_s = -1;
  int tr_block = -1, tr_lblock = -1, tr_mblock = -1, tr_from = -1, tr_to = -1;
  tr_apply->add_option("--rule", tr_rule, "merge1|merge2|relocate|move")
      ->required();
  tr_apply->add_option("--input", tr_input, "Edge-list file");
  tr_apply->add_option("--recipe", tr_recipe, "Recipe JSON file");
  tr_apply->add_option("--v", tr_v, "Shared cut vertex (merge1/merge2)");
  tr_apply->add_option("--p", tr_p);
  tr_apply->add_option("--q", tr_q);
  tr_apply->add_option("--r", tr_r);
  tr_apply->add_option("--s", tr_s);
  tr_apply->add_option("--block", tr_block, "Block id (relocate/move)");
  tr_apply->add_option("--l-block", tr_lblock, "K_l block id (merge1)");
  tr_apply->add_option("--m-block", tr_mblock, "K_m block id (merge1)");
  tr_apply->add_option("--from", tr_from, "Current cut vertex (move)");
  tr_apply->add_option("--to", tr_to, "Destination vertex (move)");
  tr_apply->callback([&]() {
    Graph g = load_input(tr_input, tr_recipe);
    Graph result = Graph(1);
    if (tr_rule == "merge1") {
      result = merge_blocks_case1(g, tr_v, tr_lblock, tr_mblock, tr_p, tr_q,
                                  tr_r, tr_s);
    } else if (tr_rule == "merge2") {
      result = merge_blocks_case2(g, tr_v, tr_p, tr_q, tr_r, tr_s);
    } else if (tr_rule == "relocate") {
      result = relocate_pendant_triangles(g, tr_block);
    } else if (tr_rule == "move") {
      result = move_pendant_block(g, tr_block, tr_from, tr_to);
    } else {
      throw std::runtime_error("unknown rule '" + tr_rule + "'");
    }
    json j;
    j["rule"] = tr_rule;
    for (auto [tag, graph] : {std::pair<const char*, const Graph*>{"before", &g},
                              {"after", &result}}) {
      json side = block_summary(*graph);
      side["rho"] = spectral_radius(*graph, cfg.tolerance).rho;
      side["Z"] = zero_forcing_number_formula(blocks_and_cut_vertices(*graph));
      side["edges"] = graph->edge_count();
      j[tag] = side;
    }
    j["rho_increase"] = j["after"]["rho"].get<double>() -
                        j["before"]["rho"].get<double>();
    out << j.dump() << "\n";
  });

  // ---- enumerate ----
  auto* en = app.add_subcommand("enumerate", "Clique-tree classes up to isomorphism");
  int en_n = 0, en_k = -1, en_min_block = 3;
  bool en_list = false;
  en->add_option("--n", en_n, "Vertex count")->required();
  en->add_option("--k", en_k, "Restrict to zero forcing number k");
  en->add_option("--min-block", en_min_block, "Minimum block size");
  en->add_flag("--edges", en_list, "Include edge lists in the output");
  en->callback([&]() {
    auto classes = en_k >= 0 ? class_G(en_n, en_k, cfg.enum_cap)
                             : enumerate_clique_trees(en_n, en_min_block,
                                                      cfg.enum_cap);
    json j;
    j["n"] = en_n;
    j["min_block"] = en_min_block;
    if (en_k >= 0) j["k"] = en_k;
    j["count"] = classes.size();
    auto arr = json::array();
    for (const auto& g : classes) {
      auto ct = blocks_and_cut_vertices(g);
      json item;
      item["canonical"] = canonical_form(ct);
      item["blocks"] = ct.size_multiset();
      item["Z"] = zero_forcing_number_formula(ct);
      if (en_list) item["edge_list"] = format_edge_list(g);
      arr.push_back(item);
    }
    j["classes"] = arr;
    out << j.dump(2) << "\n";
  });

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "Theorem-level checks");
  ver->require_subcommand(1);
  int ver_n = 0, ver_k = 0, ver_nmax = 12, ver_nmin = 3, ver_instances = 200;

  auto* ver_main = ver->add_subcommand("main-theorem",
                                       "Unique extremal graph for one (n,k)");
  ver_main->add_option("--n", ver_n)->required();
  ver_main->add_option("--k", ver_k)->required();
  ver_main->callback([&]() {
    auto rep = verify_main_theorem(ver_n, ver_k, cfg.tolerance, cfg.enum_cap);
    out << report_json(rep).dump(2) << "\n";
    if (!rep.unique || !rep.matches_extremal) exit_code = 1;
  });

  auto* ver_sweep = ver->add_subcommand("sweep", "All valid (n,k) up to --nmax");
  ver_sweep->add_option("--nmax", ver_nmax)->required();
  ver_sweep->add_option("--nmin", ver_nmin);
  ver_sweep->callback([&]() { exit_code = sweep(ver_nmin, ver_nmax, cfg, out); });

  auto* ver_remark = ver->add_subcommand(
      "remark", "Attained zero-forcing range over all classes");
  ver_remark->add_option("--n", ver_n)->required();
  ver_remark->callback([&]() {
    auto chk = verify_remark_range(ver_n, cfg.enum_cap);
    json j;
    j["n"] = chk.n;
    j["min_Z"] = chk.min_z;
    j["max_Z"] = chk.max_z;
    j["range_matches"] = chk.range_matches;
    j["min_Z_blocks"] = chk.min_z_blocks;
    j["min_Z_class_count"] = chk.min_z_class_count;
    j["triangle_count"] = chk.triangle_count;
    j["minimizer_matches"] = chk.minimizer_matches;
    out << j.dump(2) << "\n";
    if (!chk.range_matches || !chk.minimizer_matches) exit_code = 1;
  });

  auto* ver_lemmas = ver->add_subcommand("lemmas", "Randomized property suites");
  ver_lemmas->add_option("--instances", ver_instances, "Instances per suite");
  auto* lemma_nmax =
      ver_lemmas->add_option("--nmax", ver_nmax, "Vertex cap for instances");
  ver_lemmas->callback([&]() {
    int nmax = lemma_nmax->count() ? ver_nmax : 12;
    auto results = json::array();
    bool ok = true;
    for (const auto& r :
         {edge_addition_suite(ver_instances, nmax, cfg.seed),
          pendant_perron_suite(nmax, cfg.enum_cap),
          rewrite_suite(ver_instances, std::max(nmax, 14), cfg.seed)}) {
      results.push_back(suite_json(r));
      ok = ok && r.pass();
    }
    json j;
    j["suites"] = results;
    out << j.dump(2) << "\n";
    if (!ok) exit_code = 1;
  });

  // ---- parse and dispatch ----
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace cliquespec
