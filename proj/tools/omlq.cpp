// omlq: command-line front end for the orthomodular lattice toolkit.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oml/errors.hpp"
#include "oml/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite orthomodular lattices, B.-V.B. endomorphisms and central subalgebras"};
  app.set_version_flag("--version", oml::kVersion);

  std::string command;
  std::vector<std::string> args;
  std::string input;
  std::string format = "json";
  std::optional<std::size_t> max_n;
  std::optional<std::uint64_t> max_center_subsets;
  std::string seed_catalog;

  app.add_option("command", command,
                 "validate | center | cover <elem> | check-bvb <endo-file> | enumerate-subalgebras | "
                 "enumerate-bvb | verify-correspondence | catalog <name> [params]")
      ->required();
  app.add_option("args", args, "Command arguments");
  app.add_option("-i,--input", input, "Lattice JSON file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-n", max_n, "Largest lattice for the Moore-family scan")->check(CLI::PositiveNumber);
  app.add_option("--max-center-subsets", max_center_subsets, "Largest center subset scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed-catalog", seed_catalog, "Use a catalog lattice (B3, MO2, G12, MO2xB1, ...) as input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : oml::kExitInputError;
  }

  oml::CliConfig config;
  try {
    config.command = oml::parse_command(command);
    config.size_limits = oml::limits_from_env(config.size_limits);
  } catch (const oml::LatticeError& e) {
    std::cerr << "omlq: " << e.what() << '\n';
    return oml::kExitInputError;
  }
  if (max_n) config.size_limits.moore_scan_max_n = *max_n;
  if (max_center_subsets) config.size_limits.center_scan_max_subsets = *max_center_subsets;
  config.args = std::move(args);
  config.input_path = input;
  config.seed_catalog = seed_catalog;
  config.output_format = format == "text" ? oml::OutputFormat::Text : oml::OutputFormat::Json;

  return oml::run_command(config, std::cout, std::cerr);
}
