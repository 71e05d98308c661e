#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dormant/fusion.hpp"
#include "dormant/json.hpp"
#include "dormant/modular.hpp"

namespace dormant::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kUnknownBase = 2,
  kMismatch = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Argument syntax shared by every command.

/// "6,4,2" or "generic,1"; each "generic" is a fresh token.
[[nodiscard]] std::vector<Parameter> parse_params(Prime p, std::string_view text);
/// Residues only: "1,3".
[[nodiscard]] std::vector<FpElem> parse_fp(Prime p, std::string_view text);
/// "0,2,4/1,3,5": classes separated by '/', canonicalized.
[[nodiscard]] std::vector<RadiusClass> parse_radii(Prime p, std::string_view text);
/// Reads an override file from disk (InvalidInput if unreadable).
[[nodiscard]] OverrideTable load_overrides(const std::string& path);

// Table verification against the bundled reference data.

struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> diff;
};

struct VerifyReport {
  int p = 0;
  std::vector<Check> checks;
  [[nodiscard]] bool passed() const;
};

/// The bundled reference tables (JSON).
[[nodiscard]] std::string_view reference_tables_json();

/// p must be 3, 5 or 7.
[[nodiscard]] VerifyReport verify(Prime p, const OverrideTable& overrides, unsigned threads = 1);
[[nodiscard]] Json to_json(const VerifyReport& report);

}  // namespace dormant::cli
