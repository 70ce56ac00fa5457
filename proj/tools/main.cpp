#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace coinv::cli;

int main(int argc, char** argv) {
  CLI::App app{"Torsion of coinvariants of finite abelian skew products"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the run report as JSON");

  std::string group;
  auto* predict = app.add_subcommand("predict", "Closed-form torsion for a group");
  predict->add_option("--group", group, "Moduli, e.g. 2,2")->required();

  TorsionArgs targs;
  auto* torsion = app.add_subcommand("torsion", "Compute the torsion of N(A,B)");
  torsion->add_option("--group", targs.group, "Moduli, e.g. 6,4");
  torsion->add_option("--fixture", targs.fixture, "A/B/mu fixture file ('-' for stdin)");
  torsion->add_flag("--random", targs.random, "Random valid data instead of standard data");
  torsion->add_option("--seed", targs.seed, "Seed for --random")->capture_default_str();
  torsion->add_option("--max-labels", targs.max_labels, "Largest |A|, |B| for --random")->capture_default_str();

  SkewArgs sargs;
  std::size_t levels = 0;
  auto* skew = app.add_subcommand("skew", "Stagewise torsion of a pair of ordered diagrams");
  skew->add_option("--x", sargs.x, "Diagram for X (JSON)");
  skew->add_option("--y", sargs.y, "Diagram for Y (JSON)");
  skew->add_option("--pair", sargs.pair, "File with {\"x\":..,\"y\":..} ('-' for stdin)");
  auto* skew_levels = skew->add_option("--levels", levels, "Number of stages");

  std::string matrix = "-";
  auto* snf = app.add_subcommand("snf", "Smith normal form and cokernel of an integer matrix");
  snf->add_option("file", matrix, "Matrix file ('-' or omitted for stdin)");

  ExampleArgs eargs;
  auto* example = app.add_subcommand("example", "Emit an example diagram or pair as JSON");
  example->add_option("name", eargs.name, "octagonal | rotation")->required();
  example->add_option("--levels", eargs.levels, "Number of levels")->capture_default_str();
  example->add_option("--digits", eargs.digits, "Continued-fraction digits (rotation)")->capture_default_str();
  example->add_option("--group", eargs.group, "Group (rotation)")->capture_default_str();
  example->add_option("--long", eargs.long_label, "Cell label of the long tower (rotation)")->capture_default_str();
  example->add_option("--short", eargs.short_label, "Cell label of the short tower (rotation)")->capture_default_str();
  example->add_option("--x", eargs.x, "Write X (or the rotation diagram) to this file");
  example->add_option("--y", eargs.y, "Write Y to this file");

  ClassifyArgs cargs;
  auto* classify = app.add_subcommand("classify", "Residues of a torsion class");
  classify->add_option("--element", cargs.element, "Element file, lines 'a b : ring element'")->required();
  classify->add_option("--group", cargs.group, "Group; standard data");
  classify->add_option("--fixture", cargs.fixture, "A/B/mu fixture file");

  CLI11_PARSE(app, argc, argv);

  RunReport report;
  try {
    if (*predict) report = cmd_predict(group);
    else if (*torsion) report = cmd_torsion(targs);
    else if (*skew) {
      if (*skew_levels) sargs.levels = levels;
      report = cmd_skew(sargs);
    } else if (*snf) report = cmd_snf(matrix);
    else if (*example) report = cmd_example(eargs);
    else if (*classify) report = cmd_classify(cargs);
  } catch (const std::exception& e) {
    if (json) {
      nlohmann::ordered_json j;
      j["command"] = app.get_subcommands().front()->get_name();
      j["error"] = e.what();
      j["exit_status"] = 2;
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json) std::cout << report.to_json().dump(2) << "\n";
  else
    for (const std::string& line : report.lines) std::cout << line << "\n";
  return report.exit_status;
}
