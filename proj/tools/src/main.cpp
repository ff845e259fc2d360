#include <iostream>

#include <CLI11.hpp>

#include "fitkernel/error.hpp"
#include "fitkernel_cli/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = fitkernel::cli;
  CLI::App app{"fitkernel: Fitting invariants, reduced norms and conductors over group rings"};
  app.set_version_flag("--version", "fitkernel 0.3.0 (schema 1)");

  std::string verb;
  std::string source;
  std::string format = "json";
  app.add_option("verb", verb, "Computation to run")->required()->check(CLI::IsMember(cli::verbs()));
  app.add_option("input", source, "Input file, '-' for stdin, or inline JSON")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  CLI11_PARSE(app, argc, argv);

  const cli::Format fmt = format == "text" ? cli::Format::Text : cli::Format::Json;
  cli::Outcome outcome;
  try {
    outcome = cli::run({verb, cli::load_input(source), fmt});
  } catch (const fitkernel::Error& e) {
    outcome = cli::report_error(verb, e.kind(), e.what(), fmt);
  }
  std::cout << outcome.rendered;
  return outcome.status;
}
