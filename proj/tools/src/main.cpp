#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/krausz.hpp"

using namespace linegraph;
using namespace linegraph::cli;

int main(int argc, char** argv) {
  CLI::App app{"Line graph recognition, decompositions, root graphs and Whitney lifting"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "One JSON object per line");
  app.add_flag("--dot", opt.dot, "Emit graphs as Graphviz text");
  app.add_option("--cap", opt.cap, "Replace every size cap with this value");
  app.add_option("--format", opt.format, "Input format, overriding the file extension")
      ->check(CLI::IsMember({"g6", "edges"}));
  app.add_option("--jobs", opt.jobs, "Worker threads for selfcheck")->check(CLI::PositiveNumber);

  std::string path, second, third;
  std::vector<std::string> names;
  std::size_t k = 0, m = 0;

  auto* recognize = app.add_subcommand("recognize", "Decide whether the graph is a line graph");
  recognize->add_option("graph", path)->required();
  auto* witness = app.add_subcommand("witness", "List one forbidden induced subgraph per Beineke index");
  witness->add_option("graph", path)->required();
  auto* decompose = app.add_subcommand("decompose", "Print the least line graph decomposition");
  decompose->add_option("graph", path)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Print every line graph decomposition");
  enumerate->add_option("graph", path)->required();
  auto* canonical = app.add_subcommand("canonical", "Print the canonical relation");
  canonical->add_option("graph", path)->required();
  auto* validate = app.add_subcommand("validate-relation", "Check a relation file against a graph");
  validate->add_option("graph", path)->required();
  validate->add_option("relation", second)->required();
  auto* root = app.add_subcommand("root", "Reconstruct a root graph and the phi table");
  root->add_option("graph", path)->required();
  root->add_option("--via", opt.via, "Construction to use")
      ->check(CLI::IsMember({"relation", "decomposition"}));
  auto* linegraph_cmd = app.add_subcommand("linegraph", "Print the line graph");
  linegraph_cmd->add_option("graph", path)->required();
  auto* whitney = app.add_subcommand("whitney", "Lift a line graph isomorphism to the roots");
  whitney->add_option("G", path)->required();
  whitney->add_option("H", second)->required();
  whitney->add_option("phi", third, "Lines 'u-v x-y' mapping G-edges to H-edges")->required();
  auto* k0 = app.add_subcommand("k0-demo", "Finite truncation of the K0 graph");
  k0->add_option("k", k)->required();
  k0->add_option("m", m)->required();
  auto* dump = app.add_subcommand("catalog-dump", "Print catalog entries as graph6");
  dump->add_option("names", names, "Entry names or role:index; all entries when omitted");
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the shipped fixture checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  Printer out(std::cout, opt.json);
  try {
    if (*recognize) return cmd_recognize(path, opt, out);
    if (*witness) return cmd_witness(path, opt, out);
    if (*decompose) return cmd_decompose(path, opt, out);
    if (*enumerate) return cmd_enumerate(path, opt, out);
    if (*canonical) return cmd_canonical(path, opt, out);
    if (*validate) return cmd_validate_relation(path, second, opt, out);
    if (*root) return cmd_root(path, opt, out);
    if (*linegraph_cmd) return cmd_linegraph(path, opt, out);
    if (*whitney) return cmd_whitney(path, second, third, opt, out);
    if (*k0) return cmd_k0_demo(k, m, opt, out);
    if (*dump) return cmd_catalog_dump(names, opt, out);
    if (*selfcheck) return cmd_selfcheck(opt, out);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return refused;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return usage;
  } catch (const InvalidStructure& e) {
    std::cerr << e.what() << '\n';
    return usage;
  }
  return usage;
}
