#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace pdep::cli;
  CLI::App app{"Implication and Armstrong relations for probabilistic dependencies"};
  app.require_subcommand(1);

  ImpliesOptions implies;
  auto* cmd = app.add_subcommand("implies", "decide whether sigma implies an atom");
  cmd->add_option("--sigma", implies.sigma, "dependency file")->required();
  cmd->add_option("--query", implies.query, "atom, e.g. \"x y -> z\"")->required();
  cmd->add_flag("--via-uind", implies.via_uind, "answer through the inclusion translation");
  cmd->add_flag("--oracle", implies.oracle, "cross-check with the axiomatic closure");
  cmd->add_option("--counterexample", implies.counterexample, "write a refuting team here");

  ArmstrongOptions armstrong;
  cmd = app.add_subcommand("armstrong", "build a team realising exactly the consequences");
  cmd->add_option("--sigma", armstrong.sigma, "dependency file")->required();
  cmd->add_option("--out", armstrong.out, "team CSV to write")->required();
  cmd->add_flag("--full-fd", armstrong.full_fd, "also refute every non-implied FD");
  cmd->add_option("--max-vars", armstrong.max_vars, "domain cap for --full-fd");

  CheckOptions check;
  cmd = app.add_subcommand("check", "evaluate atoms on a team");
  cmd->add_option("--team", check.team, "team CSV")->required();
  auto* atoms = cmd->add_option("--atoms", check.atoms_file, "file with one atom per line");
  auto* atom = cmd->add_option("--atom", check.atom, "single atom");
  atoms->excludes(atom);

  ClosureOptions closure;
  cmd = app.add_subcommand("closure", "list implied unary atoms");
  cmd->add_option("--sigma", closure.sigma, "dependency file")->required();
  cmd->add_option("--var", closure.var, "print only the variables this one determines");
  cmd->add_option("--arity-cap", closure.arity_cap, "also list FDs with |lhs| below the cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return error;
  }
  if (app.got_subcommand("implies")) return cmd_implies(implies, std::cout, std::cerr);
  if (app.got_subcommand("armstrong")) return cmd_armstrong(armstrong, std::cout, std::cerr);
  if (app.got_subcommand("check")) return cmd_check(check, std::cout, std::cerr);
  return cmd_closure(closure, std::cout, std::cerr);
}
