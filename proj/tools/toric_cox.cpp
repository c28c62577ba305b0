#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/commands.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cox rings and Euler modules of smooth complete toric varieties"};
  app.require_subcommand(1);

  std::string file;
  std::string degree;
  bool json = false;

  const char* names[][2] = {
      {"validate", "Check that a fan is simplicial, smooth and complete"},
      {"cox", "Class group, degrees, effective cone, kappa and irrelevant ideal"},
      {"euler", "Euler module rank, basis degrees and a graded piece"},
      {"reconstruct", "Rebuild the fan from a grading matrix and an ample class"},
      {"verify", "Run the full invariant suite on one fan"},
  };
  for (auto& [name, help] : names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input JSON file")->required();
    sub->add_flag("--json", json, "Emit the report as JSON");
    if (std::string(name) == "euler") sub->add_option("--degree", degree, "Degree, e.g. 1,1");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : toric::kExitParse;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<std::string> deg;
  if (!degree.empty()) deg = degree;

  toric::CommandResult res;
  try {
    res = toric::run_command(command, toric::read_file(file), deg);
  } catch (const toric::Error& e) {
    res.report.command = command;
    res.report.set_error(std::string(toric::to_string(e.code())), e.what());
    res.exit_code = toric::kExitParse;
  }
  if (json) {
    std::cout << res.report.to_json().dump(2) << "\n";
  } else {
    std::cout << res.report.to_text();
  }
  return res.exit_code;
}
