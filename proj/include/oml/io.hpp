#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "oml/correspondence.hpp"
#include "oml/endomap.hpp"
#include "oml/lattice.hpp"
#include "oml/logic_ops.hpp"

namespace oml {

inline constexpr const char* kVersion = "0.1.0";

// Lattice file:  { "name": s, "n": k, "covers": [[lo, hi], ...] | "leq": [[0/1, ...], ...],
//                  "ortho": [...], "labels": [...]? }
// Endomap file:  { "image": [...] }

LatticeSpec parse_lattice_json(const std::string& text);
LatticeSpec parse_lattice_file(const std::filesystem::path& path);

Endomap parse_endomap_json(const std::string& text);
Endomap parse_endomap_file(const std::filesystem::path& path);

/// Hasse-diagram form of a table; covers sorted ascending.
nlohmann::json lattice_to_json(const OmlTable& table);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const OmlTable& l, const Sublattice& s);
nlohmann::json to_json(const OmlTable& l, const CorrespondenceReport& report);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

enum class Command {
  Validate,
  Center,
  Cover,
  CheckBvb,
  EnumerateSubalgebras,
  EnumerateBvb,
  VerifyCorrespondence,
  Catalog,
};

/// Throws MalformedInput on an unknown name.
Command parse_command(const std::string& name);
std::string command_name(Command c);

enum class OutputFormat { Json, Text };

struct CliConfig {
  Command command = Command::Validate;
  std::vector<std::string> args;  // element for `cover`, endo file for `check-bvb`, name for `catalog`
  std::filesystem::path input_path;
  std::string seed_catalog;       // used instead of input_path when non-empty
  OutputFormat output_format = OutputFormat::Json;
  SizeLimits size_limits;
};

/// Applies OMLQ_MAX_N and OMLQ_MAX_CENTER_SUBSETS when set. Throws
/// MalformedInput on non-positive or unparsable values.
SizeLimits limits_from_env(SizeLimits base);

enum ExitCode : int { kExitPassed = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command. The report goes to `out`; diagnostics for input errors
/// also go to `err`.
int run_command(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace oml
