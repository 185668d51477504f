#ifndef ABEL_COMMANDS_HPP
#define ABEL_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "abel/genfun.hpp"
#include "abel/lie_type.hpp"

// Batch command implementations behind the CLI front end.  Each
// returns the process exit code: 0 success, 1 verification mismatch,
// 2 usage/resource/I-O error.  Output is deterministic: identical
// invocations produce byte-identical text.
namespace abel::cli {

enum class Format { Text, Csv, Records };

struct Options {
  Format format = Format::Text;
  int max_rank = kEnumerationRankCap;
  // Set when --max-rank was given explicitly; verify-all sweeps to a
  // small default otherwise.
  bool max_rank_given = false;
  std::optional<std::string> out_path;
};

int cmd_roots(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err);

int cmd_omega(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err);

int cmd_hasse(const std::string& type_str, const Options& opts,
              std::ostream& out, std::ostream& err);

// mode: "list", "min-gens" or "dist".
int cmd_ideals(const std::string& type_str, const std::string& mode,
               const Options& opts, std::ostream& out, std::ostream& err);

int cmd_genfun(const std::string& type_str, const Options& opts,
               std::ostream& out, std::ostream& err);

// selector: a type string or "all".
int cmd_verify(const std::string& selector, const Options& opts,
               std::ostream& out, std::ostream& err);

// Prints one line (or record) per check; returns 1 when any check
// failed.  Shared by cmd_verify and the negative-path tests.
int print_verification(const VerificationReport& report, Format format,
                       std::ostream& out, bool csv_header = true);

} // namespace abel::cli

#endif
