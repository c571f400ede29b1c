#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gentree/cli.hpp"

namespace {

int finish(const gentree::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gentree: finitely labeled generating trees and exact generating "
      "functions for pattern-avoiding permutations"};
  app.require_subcommand(1);

  std::string basis;
  std::string config_path;
  int n_max = 0;

  auto* check = app.add_subcommand(
      "check", "report the degree-bound witnesses for a basis");
  check->add_option("basis", basis, "pattern basis, e.g. \"132,3241\"")
      ->required();

  auto* tree = app.add_subcommand(
      "tree", "derive the generating tree and print its rule system");
  tree->add_option("basis", basis, "pattern basis")->required();
  bool as_json = false;
  bool as_dot = false;
  bool as_text = false;
  auto* jopt = tree->add_flag("--json", as_json, "emit the spec as JSON");
  auto* dopt = tree->add_flag("--dot", as_dot, "emit the label automaton");
  tree->add_flag("--text", as_text, "emit the rule list (default)")
      ->excludes(jopt)
      ->excludes(dopt);
  jopt->excludes(dopt);

  auto* gf = app.add_subcommand(
      "gf", "derive and print the exact rational generating function");
  gf->add_option("basis", basis, "pattern basis")->required();
  bool latex = false;
  gf->add_flag("--latex", latex, "LaTeX instead of plain text");

  auto* count = app.add_subcommand("count", "print avoider counts by length");
  count->add_option("basis", basis, "pattern basis")->required();
  count->add_option("N", n_max, "count lengths 1..N")->required();
  bool use_oracle = false;
  bool use_series = false;
  auto* oopt = count->add_flag("--oracle", use_oracle,
                               "brute-force enumeration");
  count->add_flag("--series", use_series,
                  "series of the derived generating function (default)")
      ->excludes(oopt);

  auto* verify = app.add_subcommand(
      "verify", "cross-check the derivation against brute force");
  verify->add_option("basis", basis, "pattern basis")->required();
  verify->add_option("N", n_max, "compare lengths 1..N")->required();

  auto* tables = app.add_subcommand(
      "tables", "run a config of bases against expected generating functions");
  tables->add_option("config", config_path, "JSON config path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace gentree::cli;
  if (check->parsed()) return finish(run_check(basis));
  if (tree->parsed()) {
    TreeFormat format = TreeFormat::text;
    if (as_json) format = TreeFormat::json;
    if (as_dot) format = TreeFormat::dot;
    return finish(run_tree(basis, format));
  }
  if (gf->parsed()) return finish(run_gf(basis, latex));
  if (count->parsed()) return finish(run_count(basis, n_max, use_oracle));
  if (verify->parsed()) return finish(run_verify(basis, n_max));
  if (tables->parsed()) return finish(run_tables(config_path));
  return 2;
}
