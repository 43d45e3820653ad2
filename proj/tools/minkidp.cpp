// minkidp: exact decomposition toolkit for integral convex polytopes given by
// their generators, with graph edge-polytope constructions and a deterministic
// verification harness.
//
// Exit codes: 0 success / all checks pass; 1 property fails or a witness is
// found; 2 usage or input error.

#include <CLI11.hpp>

#include <mink/edge_polytope.hpp>
#include <mink/graph.hpp>
#include <mink/harness.hpp>
#include <mink/json_io.hpp>
#include <mink/polytope.hpp>
#include <mink/rational.hpp>
#include <mink/semigroup.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

mink::LatticePolytope load_polytope(const std::string& path) {
  return mink::polytope_from_json(mink::parse_json_text(mink::read_text_file(path), path));
}

mink::Graph load_graph(const std::string& path) {
  return mink::graph_from_json(mink::parse_json_text(mink::read_text_file(path), path));
}

std::vector<mink::BigInt> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<mink::BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument(what + ": empty entry in list");
    try {
      out.emplace_back(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": not an integer: \"" + item + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument(what + ": empty list");
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int report_exit(const mink::CheckReport& report) {
  print_json(mink::report_to_json(report));
  return report.verdict == "FAILS" ? 1 : 0;
}

int run_verify(const mink::RunConfig& config, bool as_json) {
  std::vector<mink::PaperCheck> checks = mink::verify_paper(config);
  int fails = 0, skips = 0;
  for (const auto& c : checks) {
    if (c.status == "FAIL") ++fails;
    if (c.status == "SKIPPED") ++skips;
  }
  if (as_json) {
    json out{{"config",
              {{"max_k", config.max_k},
               {"random_seed", config.random_seed},
               {"sample_count", config.sample_count},
               {"dim_cap", config.dim_cap}}},
             {"checks", json::array()},
             {"fail_count", fails},
             {"skip_count", skips}};
    for (const auto& c : checks) {
      json jc{{"id", c.id}, {"status", c.status}, {"details", c.details}};
      if (c.status == "SKIPPED") jc["reason"] = c.reason;
      out["checks"].push_back(std::move(jc));
    }
    print_json(out);
  } else {
    std::cout << "verification run: seed=" << config.random_seed << " max_k=" << config.max_k
              << " sample_count=" << config.sample_count << " dim_cap=" << config.dim_cap << "\n";
    for (const auto& c : checks) {
      std::cout << c.status;
      for (std::size_t pad = c.status.size(); pad < 8; ++pad) std::cout << ' ';
      std::cout << c.id;
      if (!c.reason.empty()) std::cout << " (" << c.reason << ")";
      if (!c.details.empty()) std::cout << " -- " << c.details;
      std::cout << "\n";
    }
    std::cout << "summary: " << (checks.size() - fails - skips) << " pass, " << fails
              << " fail, " << skips << " skipped\n";
  }
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decomposition checks for integral polytopes and graph edge polytopes"};
  app.require_subcommand(1);

  auto* dim_cmd = app.add_subcommand("dim", "affine dimension of a polytope");
  std::string dim_file;
  dim_cmd->add_option("polytope", dim_file, "polytope JSON file")->required();

  auto* minksum_cmd = app.add_subcommand("minksum", "Minkowski sum of polytopes");
  std::vector<std::string> minksum_files;
  minksum_cmd->add_option("polytopes", minksum_files, "polytope JSON files")
      ->required()
      ->expected(2, -1);

  auto* points_cmd = app.add_subcommand("points", "lattice points of the k-fold dilate");
  std::string points_file;
  int points_k = 1;
  points_cmd->add_option("polytope", points_file, "polytope JSON file")->required();
  points_cmd->add_option("--k", points_k, "dilation factor (default 1)")
      ->check(CLI::PositiveNumber);

  auto* idp_cmd = app.add_subcommand("idp", "decomposition property check");
  std::string idp_file;
  int idp_max_k = 3;
  idp_cmd->add_option("polytope", idp_file, "polytope JSON file")->required();
  idp_cmd->add_option("--max-k", idp_max_k, "largest dilation level checked (default 3)")
      ->check(CLI::PositiveNumber);

  auto* normal_cmd = app.add_subcommand("normal", "lattice-restricted decomposition check");
  std::string normal_file;
  int normal_max_k = 3;
  normal_cmd->add_option("polytope", normal_file, "polytope JSON file")->required();
  normal_cmd->add_option("--max-k", normal_max_k, "largest dilation level checked (default 3)")
      ->check(CLI::PositiveNumber);

  auto* level_cmd = app.add_subcommand("level", "interior-split check of a weighted sum");
  std::vector<std::string> level_files;
  std::string level_ns;
  int level_max_k = 3;
  level_cmd->add_option("polytopes", level_files, "polytope JSON files")
      ->required()
      ->expected(1, -1);
  level_cmd->add_option("--n", level_ns, "comma-separated positive weights, one per polytope")
      ->required();
  level_cmd->add_option("--max-k", level_max_k, "largest dilation level checked (default 3)")
      ->check(CLI::PositiveNumber);

  auto* edge_cmd = app.add_subcommand("edge-polytope", "edge polytope of a graph");
  std::string edge_file;
  edge_cmd->add_option("graph", edge_file, "graph JSON file")->required();

  auto* occ_cmd = app.add_subcommand("occ", "odd-cycle condition of a connected graph");
  std::string occ_file;
  occ_cmd->add_option("graph", occ_file, "graph JSON file")->required();

  auto* cvc_cmd =
      app.add_subcommand("common-vertex", "common-vertex condition of a connected graph");
  std::string cvc_file;
  cvc_cmd->add_option("graph", cvc_file, "graph JSON file")->required();

  auto* dec_cmd = app.add_subcommand(
      "decompose", "split a point of k(P_G1 + P_G2) into k edge-pair sums");
  std::string dec_g1, dec_g2, dec_alpha;
  int dec_k = 1;
  dec_cmd->add_option("graph1", dec_g1, "covering graph JSON file")->required();
  dec_cmd->add_option("graph2", dec_g2, "covered graph JSON file")->required();
  dec_cmd->add_option("--alpha", dec_alpha, "comma-separated integer coordinates")->required();
  dec_cmd->add_option("--k", dec_k, "number of parts")->required()->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the full verification suite");
  mink::RunConfig config;
  bool verify_json = false;
  verify_cmd->add_option("--seed", config.random_seed, "random seed (default 0)");
  verify_cmd->add_option("--max-k", config.max_k, "largest dilation level (default 3)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--sample-count", config.sample_count,
                         "instances per randomized check (default 20)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dim-cap", config.dim_cap, "ambient dimension cap (default 8)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(dim_cmd)) {
      std::cout << mink::dimension(load_polytope(dim_file)) << "\n";
      return 0;
    }
    if (app.got_subcommand(minksum_cmd)) {
      std::vector<mink::LatticePolytope> ps;
      for (const auto& f : minksum_files) ps.push_back(load_polytope(f));
      print_json(mink::polytope_to_json(mink::minkowski_sum(ps)));
      return 0;
    }
    if (app.got_subcommand(points_cmd)) {
      mink::LatticePolytope p = load_polytope(points_file);
      if (points_k > 1) p = mink::dilate(p, mink::BigInt(points_k));
      print_json(mink::points_to_json(mink::lattice_points(p)));
      return 0;
    }
    if (app.got_subcommand(idp_cmd)) {
      return report_exit(mink::idp_check(load_polytope(idp_file), idp_max_k));
    }
    if (app.got_subcommand(normal_cmd)) {
      return report_exit(mink::normal_check(load_polytope(normal_file), normal_max_k));
    }
    if (app.got_subcommand(level_cmd)) {
      std::vector<mink::LatticePolytope> ps;
      for (const auto& f : level_files) ps.push_back(load_polytope(f));
      std::vector<mink::BigInt> ns = parse_int_list(level_ns, "--n");
      if (ns.size() != ps.size())
        throw std::invalid_argument("--n: expected one weight per polytope");
      return report_exit(mink::level_check(ps, ns, level_max_k));
    }
    if (app.got_subcommand(edge_cmd)) {
      print_json(mink::polytope_to_json(mink::edge_polytope(load_graph(edge_file))));
      return 0;
    }
    if (app.got_subcommand(occ_cmd) || app.got_subcommand(cvc_cmd)) {
      const bool occ = app.got_subcommand(occ_cmd);
      mink::Graph g = load_graph(occ ? occ_file : cvc_file);
      if (!mink::is_connected(g))
        throw std::invalid_argument("graph: must be connected for this check");
      const bool holds =
          occ ? mink::odd_cycle_condition(g) : mink::common_vertex_condition(g);
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? 0 : 1;
    }
    if (app.got_subcommand(dec_cmd)) {
      mink::Graph g1 = load_graph(dec_g1), g2 = load_graph(dec_g2);
      std::vector<mink::BigInt> coords = parse_int_list(dec_alpha, "--alpha");
      mink::LatticePoint alpha(coords.begin(), coords.end());
      auto parts = mink::theorem34_decompose(g1, g2, alpha, dec_k);
      if (!parts.has_value()) {
        std::cerr << "alpha is not in the " << dec_k << "-fold dilate of the edge-polytope sum\n";
        return 1;
      }
      json out{{"k", dec_k},
               {"alpha", mink::point_to_json(alpha)},
               {"parts", mink::points_to_json(*parts)}};
      print_json(out);
      return 0;
    }
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(config, verify_json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
