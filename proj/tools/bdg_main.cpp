// Command-line front end: verify the group family, dump class tables, and
// export bipartite divisor graphs.

#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bdg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bipartite divisor graphs of conjugacy class sizes"};
  app.require_subcommand(1);

  std::uint32_t p = 0;
  std::string format = "text";
  bool allow_large = false;

  auto* verify = app.add_subcommand("verify", "construct G(p) and check every structural claim");
  verify->add_option("--p", p, "odd prime parameter")->required();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--allow-large", allow_large, "lift the enumeration gate to p <= 13");

  auto* classes = app.add_subcommand("classes", "dump the conjugacy class table of G(p)");
  classes->add_option("--p", p, "odd prime parameter")->required();
  classes->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  classes->add_flag("--allow-large", allow_large, "lift the enumeration gate to p <= 13");

  std::vector<std::uint64_t> sizes_list;
  std::string table_path;
  std::uint32_t graph_p = 0;
  auto* graph = app.add_subcommand("graph", "build a bipartite divisor graph");
  auto* opt_sizes =
      graph->add_option("--sizes", sizes_list, "comma-separated positive integers")
          ->delimiter(',');
  auto* opt_p = graph->add_option("--p", graph_p, "take the class sizes of G(p)");
  auto* opt_table = graph->add_option("--table", table_path, "multiplication table file");
  graph->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  graph->add_flag("--allow-large", allow_large, "lift the enumeration gate to p <= 13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bdg::CommandOptions opts;
  opts.format = format;
  opts.allow_large = allow_large;
  try {
    opts.gate_override = bdg::gate_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (verify->parsed()) return bdg::run_verify(p, opts, std::cout, std::cerr);
  if (classes->parsed()) return bdg::run_classes(p, opts, std::cout, std::cerr);

  bdg::GraphSource source;
  if (opt_sizes->count() > 0)
    source.sizes = std::set<std::uint64_t>(sizes_list.begin(), sizes_list.end());
  if (opt_p->count() > 0) source.p = graph_p;
  if (opt_table->count() > 0) source.table_path = table_path;
  return bdg::run_graph(source, opts, std::cout, std::cerr);
}
