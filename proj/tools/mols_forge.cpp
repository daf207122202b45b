#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mols_forge: Latin squares, transversals, schemes and completions"};
  app.require_subcommand(1);
  forge::Options o;
  o.threads = forge::default_threads();

  auto common = [&](CLI::App* sub, bool takes_file = true) {
    if (takes_file) sub->add_option("file", o.input, "square file")->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--threads", o.threads, "worker threads, 0 for all cores (default MOLS_FORGE_THREADS)");
    sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
  };

  auto* check = app.add_subcommand("check", "validate a set of squares");
  common(check);
  check->get_option("file")->required();

  auto* trans = app.add_subcommand("transversals", "list common transversals");
  common(trans);
  trans->get_option("file")->required();
  trans->add_option("--through", o.through, "anchor treatments, e.g. 1,13");
  trans->add_flag("--count-only", o.count_only, "print only the number");

  auto* scheme = app.add_subcommand("scheme", "association scheme parameters");
  common(scheme);
  scheme->add_flag("--induced", o.induced, "use the complement scheme");
  scheme->add_flag("--adjacency", o.adjacency, "list first associates");
  scheme->add_option("--g", o.g, "classify as pseudo-L_g(s)");
  scheme->add_option("--edges", o.edges, "edge list instead of squares")->check(CLI::ExistingFile);
  scheme->add_option("--points", o.points, "number of points for --edges");

  auto* verify = app.add_subcommand("verify", "run the structural checks on a scheme");
  common(verify);
  verify->add_flag("--induced", o.induced, "use the complement scheme");
  verify->add_option("--g", o.g, "degree of the scheme");
  verify->add_option("--edges", o.edges, "edge list instead of squares")->check(CLI::ExistingFile);
  verify->add_option("--points", o.points, "number of points for --edges");
  verify->add_option("--pair", o.pair, "report the cliques through two treatments, e.g. 1,13");
  verify->add_option("--classification", o.classification, "resolution JSON to test as a classification")
      ->check(CLI::ExistingFile);
  verify->add_flag("--count-law", o.count_law, "check first-associate counts between transversals");

  auto* resolve = app.add_subcommand("resolve", "split common transversals into parallel classes");
  common(resolve);
  resolve->get_option("file")->required();
  resolve->add_option("--degree", o.degree, "number of classes (default s-1-w)");
  resolve->add_option("--limit", o.limit, "stop after this many, 0 for no limit");
  resolve->add_flag("--count-only", o.count_only, "print only the number");

  auto* complete = app.add_subcommand("complete", "extend to a complete set");
  common(complete);
  complete->get_option("file")->required();
  complete->add_option("--emit", o.emit, "write the certificate JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? forge::ok : forge::invalid;
  }

  if (check->parsed()) return forge::cmd_check(o, std::cout, std::cerr);
  if (trans->parsed()) return forge::cmd_transversals(o, std::cout, std::cerr);
  if (scheme->parsed()) return forge::cmd_scheme(o, std::cout, std::cerr);
  if (verify->parsed()) return forge::cmd_verify(o, std::cout, std::cerr);
  if (resolve->parsed()) return forge::cmd_resolve(o, std::cout, std::cerr);
  return forge::cmd_complete(o, std::cout, std::cerr);
}
