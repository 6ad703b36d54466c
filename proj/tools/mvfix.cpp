// mvfix: certificates and fixed-point iterations for multivalued contractions.
//
//   mvfix <command> --scenario <path> [--from p --to p] [--start p] [--out <path>]
//
// Points are comma-separated coordinates, e.g. --from 0,0 --to 1,0.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvfix/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mvfix: uniform local contraction certificates for multivalued maps"};
  app.require_subcommand(1, 1);

  std::string scenarioPath;
  std::string outPath;
  mvfix::cli::Flags flags;
  std::string from, to, start;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenarioPath, "scenario JSON file")->required();
    cmd->add_option("--out", outPath, "write the artifact here instead of stdout");
  };

  auto* reduce = app.add_subcommand("reduce", "derive the (epsilon, k) certificate");
  auto* verify = app.add_subcommand("verify", "derive and spot-check the certificate");
  auto* chain = app.add_subcommand("chain", "telescoping chain bound between two points");
  auto* iterate = app.add_subcommand("iterate", "nearest-point fixed-point iteration");
  auto* chainability = app.add_subcommand("chainability", "epsilon-chainability of a sample");
  for (auto* cmd : {reduce, verify, chain, iterate, chainability}) addCommon(cmd);
  chain->add_option("--from", from, "first endpoint")->required();
  chain->add_option("--to", to, "second endpoint")->required();
  iterate->add_option("--start", start, "initial point")->required();
  iterate->add_flag("--local", flags.local, "only allow steps shorter than epsilon");
  iterate->add_option("--max-iter", flags.maxIter, "iteration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  auto* selected = app.get_subcommands().front();
  const auto command = mvfix::cli::parseCommand(selected->get_name());
  if (!from.empty()) flags.from = from;
  if (!to.empty()) flags.to = to;
  if (!start.empty()) flags.start = start;

  std::ostringstream artifact;
  const int code = mvfix::cli::runFile(*command, scenarioPath, flags, artifact, std::cerr);
  if (outPath.empty()) {
    std::cout << artifact.str();
  } else {
    std::ofstream file(outPath, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << outPath << '\n';
      return 3;
    }
    file << artifact.str();
  }
  return code;
}
