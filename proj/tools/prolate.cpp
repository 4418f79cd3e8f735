#include <iostream>

#include "CLI11.hpp"
#include "prolate/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Darboux data, commuting operators and their numerical certificates"};
  app.require_subcommand(1);
  prolate::cli::Overrides o;
  std::string config;
  int l1 = -1, l2 = -1;
  double tol = 0.0;
  int grid = 0;
  std::string out;

  for (const char* name : {"verify", "dims", "solve", "eval"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("config", config, "YAML job file")->required();
    sub->add_option("--l1", l1, "fixed l1 (disables the minimal search)");
    sub->add_option("--l2", l2, "fixed l2 (disables the minimal search)");
    sub->add_flag("--minimal", o.minimal, "search for the minimal (l1, l2)");
    sub->add_option("--tol", tol, "commutator residual tolerance");
    sub->add_option("--grid", grid, "number of Gamma_1 grid points");
    sub->add_option("--out", out, "output directory");
  }
  CLI11_PARSE(app, argc, argv);

  if (l1 >= 0) o.l1 = l1;
  if (l2 >= 0) o.l2 = l2;
  if (tol > 0.0) o.tol = tol;
  if (grid > 0) o.grid = grid;
  if (!out.empty()) o.out = out;

  const std::string command = app.get_subcommands().front()->get_name();
  const prolate::cli::CommandResult r = prolate::cli::run(command, config, o);
  std::cout << r.report;
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics << '\n';
  return r.exit_code;
}
