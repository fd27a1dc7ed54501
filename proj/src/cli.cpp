#include "sforest/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

#include <CLI11.hpp>

#include "sforest/collapse.hpp"
#include "sforest/error.hpp"
#include "sforest/serialize.hpp"
#include "sforest/verify.hpp"

namespace sforest {
namespace {

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

Relation load_relation(const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON");
  return relation_from_json(j);
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"S-forests of graphs and the collapse of the permutohedron", "sforest"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string relation_path;
  std::string term_text;
  std::string format = "json";
  VerifyOptions verify_opts;

  auto* forests = app.add_subcommand("forests", "List the S-forests of a graph, one per line");
  forests->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();

  auto* collapse_cmd = app.add_subcommand("collapse", "Export the collapsed permutohedron skeleton");
  collapse_cmd->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();
  collapse_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  auto* kappa_cmd = app.add_subcommand("kappa", "Print the relation of a diversified S-term");
  kappa_cmd->add_option("term", term_text, "S-term such as \"x*(y+z)\"")->required();

  auto* sterm_of = app.add_subcommand("sterm-of", "Print the canonical S-term of a relation");
  sterm_of->add_option("relation", relation_path, "relation JSON file")->required();

  auto* extensions = app.add_subcommand("extensions", "List the linear extensions of a partial order");
  extensions->add_option("relation", relation_path, "relation JSON file")->required();

  auto* film = app.add_subcommand("film", "Replay an S-forest as a destruction film");
  film->add_option("graph", graph_path, "graph file (JSON or edge list)")->required();
  film->add_option("term", term_text, "S-forest of the graph")->required();

  auto* verify = app.add_subcommand("verify", "Run the brute-force proposition suites");
  verify->add_option("--max-n", verify_opts.max_n, "largest exhaustive instance size")->capture_default_str();
  verify->add_option("--random-count", verify_opts.random_count, "random instances per randomized suite")
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "random seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitDomainError;
  }

  try {
    if (*forests) {
      for (const auto& line : to_json(t_forests(load_graph(graph_path)))) out << line.get<std::string>() << "\n";
    } else if (*collapse_cmd) {
      const auto fmt = format == "dot" ? SkeletonFormat::Dot : SkeletonFormat::Json;
      out << export_skeleton(collapse(load_graph(graph_path)), fmt);
    } else if (*kappa_cmd) {
      out << to_json(kappa(parse_sterm(term_text))).dump(2) << "\n";
    } else if (*sterm_of) {
      out << render_sterm(sterm_of_ftp(load_relation(relation_path))) << "\n";
    } else if (*extensions) {
      for (const Permutation& p : linear_extensions(load_relation(relation_path))) out << p.str() << "\n";
    } else if (*film) {
      const Graph g = load_graph(graph_path);
      out << film_to_json(destruction_film(g, parse_sterm(term_text))).dump(2) << "\n";
    } else if (*verify) {
      const auto reports = verify_all(verify_opts);
      const nlohmann::json report = verify_report_json(verify_opts, reports);
      out << report.dump(2) << "\n";
      return report["status"] == "pass" ? kExitOk : kExitVerificationFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace sforest
