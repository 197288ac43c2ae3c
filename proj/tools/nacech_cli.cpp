#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "nacech/cli.hpp"

int main(int argc, char** argv) {
  nacech::RunConfig cfg;
  std::string strategy = "brute";

  CLI::App app{"Exact non-abelian Cech cohomology with finite crossed-module coefficients"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--complex", cfg.complex, "complex file or built-in name");
  app.add_option("--cm", cfg.cm, "crossed-module file or built-in name");
  app.add_option("--group", cfg.group, "group file or built-in name");
  app.add_option("--cocycle", cfg.cocycle, "cocycle file (lift: 1-cocycle file, trivial or nontrivial)");
  app.add_option("--cocycle2", cfg.cocycle2, "second cocycle file");
  app.add_option("--strategy", strategy, "brute | abelian")->check(CLI::IsMember({"brute", "abelian"}));
  app.add_option("--budget", cfg.budget, "search budget in nodes")->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "output path");
  app.add_option("--coeff", cfg.coeff, "coefficient modulus for oracle-h");
  app.add_option("--degree", cfg.degree, "degree for oracle-h");

  const std::map<std::string, std::string> commands = {
      {"validate", "validate group|cm|complex|cocycle input"},
      {"classify", "classify cocycles up to coboundary"},
      {"cohomologous", "decide whether two cocycles are cohomologous"},
      {"stabilizer", "coboundaries fixing a cocycle"},
      {"bundle-check", "build P_z, run the axiom suite and extract z again"},
      {"band", "band 1-cocycle of a cocycle"},
      {"reduce-central", "reduce to a ker(beta)-valued 2-cocycle"},
      {"lift", "lifting obstruction for a G-valued 1-cocycle"},
      {"quotient", "quotient of P_z by G"},
      {"gauge", "gauge objects and gauge crossed module"},
      {"aut2group", "equivariant endofunctors of the 2-group"},
      {"oracle-h", "order of H^k(K; Z/n)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (name == "validate") sub->add_option("kind", cfg.kind, "group | cm | complex | cocycle")->required();
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : nacech::kExitParse;
  }
  cfg.strategy = strategy == "abelian" ? nacech::Strategy::Abelian : nacech::Strategy::Brute;
  return nacech::run(cfg, std::cout);
}
