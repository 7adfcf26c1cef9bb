#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coverlab/analysis.hpp"
#include "coverlab/catalog.hpp"
#include "coverlab/error.hpp"
#include "coverlab/families.hpp"
#include "coverlab/graph_io.hpp"
#include "coverlab/sweep.hpp"

using namespace coverlab;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kCapacity = 3 };

Graph catalog_graph(const std::string& name) {
  for (auto& ng : catalog())
    if (ng.name == name) return ng.graph;
  throw InputError("unknown catalog graph '" + name + "'");
}

// A graph given either as a file or as a catalog name.
Graph operand(const std::string& file, const std::string& name, const char* what) {
  if (!file.empty() && !name.empty()) throw InputError(std::string("give either a file or a catalog name for ") + what);
  if (!file.empty()) return read_graph_file(file);
  if (!name.empty()) return catalog_graph(name);
  throw InputError(std::string("missing ") + what + " graph");
}

int report(const Graph& g, const AnalysisOptions& opts, const std::string& format) {
  const auto r = analyze(g, opts);
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.all_theorems_hold() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverlab: cover ideals of graphs, their gradings and fiber cones"};
  app.require_subcommand(1);

  AnalysisOptions aopts;
  std::string format = "json";

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the cover ideal of a graph file");
  std::string graph_file;
  analyze_cmd->add_option("file", graph_file, "Graph file")->required();
  analyze_cmd->add_option("--max-toric-degree", aopts.max_toric_degree, "Degree bound for the toric profile")
      ->capture_default_str();
  analyze_cmd->add_option("--powers", aopts.powers, "Largest power j for the power-count checks")->capture_default_str();
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* family_cmd = app.add_subcommand("family", "Construct a graph from a named family");
  std::string kind;
  std::size_t n = 0, m = 0, s = 0, k = 0;
  std::string base_file, base_name, other_file, other_name;
  bool then_analyze = false;
  family_cmd->add_option("kind", kind, "Family")
      ->required()
      ->check(CLI::IsMember(
          {"circulant", "banded-path", "two-cliques", "whisker", "h-family", "join", "path", "cycle", "complete", "catalog"}));
  family_cmd->add_option("--n", n);
  family_cmd->add_option("--m", m);
  family_cmd->add_option("--s", s);
  family_cmd->add_option("--k", k);
  family_cmd->add_option("--base", base_file, "Base graph file (whisker, join)");
  family_cmd->add_option("--of", base_name, "Base catalog graph (whisker, join, catalog)");
  family_cmd->add_option("--other", other_file, "Second graph file (join)");
  family_cmd->add_option("--other-of", other_name, "Second catalog graph (join)");
  family_cmd->add_flag("--analyze", then_analyze, "Analyze the constructed graph instead of printing it");
  family_cmd->add_option("--max-toric-degree", aopts.max_toric_degree)->capture_default_str();
  family_cmd->add_option("--powers", aopts.powers)->capture_default_str();
  family_cmd->add_option("--format", format, "Output format with --analyze")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a family sweep against its closed-form expectation");
  std::string check;
  SweepOptions sopts;
  std::string sweep_format = "csv";
  sweep_cmd->add_option("check", check, "Sweep")->required()->check(CLI::IsMember(sweep_checks()));
  sweep_cmd->add_option("--n-min", sopts.n_min);
  sweep_cmd->add_option("--n-max", sopts.n_max);
  sweep_cmd->add_option("--s-max", sopts.s_max);
  sweep_cmd->add_option("--m-max", sopts.m_max);
  sweep_cmd->add_option("--max-vertices", sopts.max_vertices, "Largest whisker base");
  sweep_cmd->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze_cmd) return report(read_graph_file(graph_file), aopts, format);

    if (*family_cmd) {
      Graph g;
      if (kind == "circulant") g = family::circulant(n, s);
      else if (kind == "banded-path") g = family::banded_path(n, s);
      else if (kind == "two-cliques") g = family::two_cliques(n, m);
      else if (kind == "h-family") g = family::h_family(k);
      else if (kind == "path") g = family::path(n);
      else if (kind == "cycle") g = family::cycle(n);
      else if (kind == "complete") g = family::complete(n);
      else if (kind == "catalog") g = catalog_graph(base_name);
      else if (kind == "whisker") g = family::whisker(family::relabel(operand(base_file, base_name, "base"), "x"));
      else g = family::join(family::relabel(operand(base_file, base_name, "base"), "x"),
                            family::relabel(operand(other_file, other_name, "other"), "y"));
      if (then_analyze) return report(g, aopts, format);
      std::cout << format_graph(g);
      return kOk;
    }

    const auto table = run_sweep(check, sopts);
    std::cout << (sweep_format == "csv" ? to_csv(table) : to_text(table));
    return table.any_mismatch() ? kMismatch : kOk;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
}
