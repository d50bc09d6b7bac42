// toric-betti: invariants of graphs and the generating-function identities
// behind them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toric/toric.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_parse = 2;
constexpr int exit_cap = 3;

const std::map<std::string, toric::OutputFormat> format_names{
    {"text", toric::OutputFormat::text},
    {"json", toric::OutputFormat::json},
    {"csv", toric::OutputFormat::csv},
};

int resolve_cap(std::optional<int> flag) {
  int cap = toric::default_vertex_cap;
  if (flag) {
    cap = *flag;
  } else if (const char* env = std::getenv("TORIC_BETTI_CAP"); env && *env) {
    try {
      std::size_t used = 0;
      cap = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw toric::parse_error(std::string("TORIC_BETTI_CAP is not an integer: '") + env + "'");
    }
  }
  if (cap < 0 || cap > toric::max_vertex_cap) {
    throw toric::parse_error("vertex cap must lie in [0, " + std::to_string(toric::max_vertex_cap) + "]");
  }
  if (cap > toric::default_vertex_cap) {
    std::cerr << "warning: vertex cap " << cap << " is above " << toric::default_vertex_cap
              << "; time grows as 3^n and memory as 2^n\n";
  }
  return cap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw toric::parse_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of real toric manifolds of graph associahedra"};
  app.require_subcommand(1);

  std::optional<int> cap_flag;
  std::string format_name;

  // invariants
  auto* inv = app.add_subcommand("invariants", "Full invariant report of one graph");
  std::string edges_path, graph6, family;
  auto* o_edges = inv->add_option("--edges", edges_path, "Edge-list file ('-' for stdin)");
  auto* o_g6 = inv->add_option("--graph6", graph6, "graph6 string");
  auto* o_family = inv->add_option("--family", family, "path:N cycle:N complete:N star:M multipartite:P1,P2,...");
  o_edges->excludes(o_g6, o_family);
  o_g6->excludes(o_family);
  inv->add_option("--format", format_name, "text|json|csv (default json)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  inv->add_option("--cap", cap_flag, "Vertex cap (default 20, env TORIC_BETTI_CAP)");

  // table5
  auto* tab = app.add_subcommand("table5", "Poincare polynomials of M(K_{p,q})");
  int pmax = 6, qmax = 3;
  tab->add_option("--pmax", pmax, "Largest p")->check(CLI::NonNegativeNumber);
  tab->add_option("--qmax", qmax, "Largest q")->check(CLI::NonNegativeNumber);
  tab->add_option("--format", format_name, "text|json|csv (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  auto* ver = app.add_subcommand("verify", "Expand generating-function identities and compare coefficients");
  std::string identity = "all";
  std::optional<int> order;
  ver->add_option("--identity", identity, "Identity id or 'all'");
  ver->add_option("--order", order, "Truncation order N for every identity")->check(CLI::NonNegativeNumber);
  ver->add_option("--format", format_name, "text|json|csv (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  ver->add_option("--cap", cap_flag, "Vertex cap for reference graphs");

  // catalog
  auto* cat = app.add_subcommand("catalog", "List the identity catalog");
  cat->add_option("--format", format_name, "text|json (default text)")->check(CLI::IsMember({"text", "json"}));

  // sequence
  auto* seq = app.add_subcommand("sequence", "Integer sequence of s-, a- or b-numbers along a family");
  std::string what, seq_family;
  int upto = 10;
  seq->add_option("--what", what, "snum|anum|bnum")->required()->check(CLI::IsMember({"snum", "anum", "bnum"}));
  seq->add_option("--family", seq_family, "path|cycle|complete|star|bipartite-row:Q")->required();
  seq->add_option("--upto", upto, "Last index")->check(CLI::NonNegativeNumber);
  seq->add_option("--format", format_name, "text|json|csv (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }

  auto format_or = [&](toric::OutputFormat fallback) {
    return format_name.empty() ? fallback : format_names.at(format_name);
  };

  try {
    if (*inv) {
      const int cap = resolve_cap(cap_flag);
      toric::Graph g;
      if (*o_edges) {
        g = toric::parse_edge_list(edges_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                     : read_file(edges_path),
                                   cap);
      } else if (*o_g6) {
        g = toric::parse_graph6(graph6, cap);
      } else if (*o_family) {
        g = toric::build_family(toric::parse_family_spec(family), cap);
      } else {
        throw toric::parse_error("one of --edges, --graph6 or --family is required");
      }
      std::cout << toric::render(toric::invariant_report(g, cap), format_or(toric::OutputFormat::json));
      return exit_ok;
    }
    if (*tab) {
      std::cout << toric::render_table(toric::table5(pmax, qmax), format_or(toric::OutputFormat::text));
      return exit_ok;
    }
    if (*ver) {
      const int cap = resolve_cap(cap_flag);
      std::vector<toric::VerificationReport> reports;
      if (identity == "all") {
        for (const auto& e : toric::identity_catalog()) reports.push_back(toric::verify_identity(e.id, order, cap));
      } else {
        reports.push_back(toric::verify_identity(identity, order, cap));
      }
      std::cout << toric::render(reports, format_or(toric::OutputFormat::text));
      const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
      return all ? exit_ok : exit_fail;
    }
    if (*cat) {
      const auto entries = toric::identity_catalog();
      if (format_or(toric::OutputFormat::text) == toric::OutputFormat::json) {
        toric::Json a = toric::Json::array();
        for (const auto& e : entries) {
          a.push_back({{"id", e.id},
                       {"identity", e.identity},
                       {"variables", e.variables},
                       {"default_order", e.default_order},
                       {"truncation", e.truncation}});
        }
        std::cout << a.dump(2) << '\n';
      } else {
        for (const auto& e : entries) std::cout << e.id << "  [order " << e.default_order << "]  " << e.identity << '\n';
      }
      return exit_ok;
    }
    if (*seq) {
      const auto kind = what == "snum"   ? toric::SequenceKind::snum
                        : what == "anum" ? toric::SequenceKind::anum
                                         : toric::SequenceKind::bnum;
      std::cout << toric::render_sequence(toric::invariant_sequence(kind, seq_family, upto),
                                          format_or(toric::OutputFormat::text));
      return exit_ok;
    }
  } catch (const toric::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_cap;
  } catch (const toric::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const toric::unknown_identity& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_fail;
  }
  return exit_fail;
}
