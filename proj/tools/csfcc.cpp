// Command-line front end: chromatic symmetric functions of cycle-chord,
// tadpole, path, cycle and theta graphs in the e-basis.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "csfcc/cli.hpp"

int main(int argc, char** argv) {
  using namespace csfcc::cli;

  CLI::App app{"Chromatic symmetric functions in the elementary basis"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}};
  app.add_option("--format", cmd.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  // exponential in the edge count
  app.add_option("--max-edges", cmd.oracle.max_edges, "Edge bound for the brute-force oracle")->capture_default_str();
  app.add_option("--jobs", cmd.oracle.jobs, "Worker threads for the oracle")->capture_default_str();

  auto* csf = app.add_subcommand("csf", "Print the e-expansion of a graph");
  csf->add_option("spec", cmd.target, "Graph spec, e.g. cc:3,3")->required();

  auto* delta = app.add_subcommand("delta", "Explain the cycle-chord weight of a composition");
  delta->add_option("composition", cmd.target, "Composition, e.g. 4,2")->required();
  delta->add_option("--b", cmd.b, "Chord position b")->required();

  auto* verify = app.add_subcommand("verify", "Compare closed formula, oracle and coloring counts");
  verify->add_option("spec", cmd.target, "Graph spec")->required();

  auto* scan = app.add_subcommand("scan-theta", "Scan theta graphs for e-positivity");
  scan->add_option("--max-n", cmd.max_n, "Largest graph order")->capture_default_str();
  scan->add_option("--resume", cmd.resume, "JSON-lines checkpoint file");

  auto* nice = app.add_subcommand("nice", "Check the stable-partition niceness condition");
  nice->add_option("spec", cmd.target, "Graph spec")->required();

  auto* chrompoly = app.add_subcommand("chrompoly", "Proper-coloring counts for k = 0..n");
  chrompoly->add_option("spec", cmd.target, "Graph spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (csf->parsed()) cmd.verb = Verb::Csf;
  else if (delta->parsed()) cmd.verb = Verb::Delta;
  else if (verify->parsed()) cmd.verb = Verb::Verify;
  else if (scan->parsed()) cmd.verb = Verb::ScanTheta;
  else if (nice->parsed()) cmd.verb = Verb::Nice;
  else cmd.verb = Verb::Chrompoly;

  return run(cmd, std::cout, std::cerr);
}
