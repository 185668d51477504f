// Command-line front end: construction, enumeration, closed forms,
// verification and Hasse export with machine-readable output.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "abel/commands.hpp"

namespace {

using abel::cli::Format;
using abel::cli::Options;

void add_common_flags(CLI::App* cmd, Options& opts, bool* max_rank_seen) {
  static const std::map<std::string, Format> format_names{
      {"text", Format::Text}, {"csv", Format::Csv}, {"records", Format::Records}};
  cmd->add_option("--format", opts.format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  cmd->add_option("--max-rank", opts.max_rank,
                  "Rank cap for enumeration (and the verify-all sweep)")
      ->each([max_rank_seen](const std::string&) { *max_rank_seen = true; });
  cmd->add_option("--out", opts.out_path, "Write output to this path");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian ideals of Borel subalgebras: enumeration, closed "
               "forms and cross-checks"};
  app.require_subcommand(1);

  Options opts;
  bool max_rank_seen = false;
  std::string type_str;
  std::string mode = "dist";
  std::string selector;

  auto* roots = app.add_subcommand("roots", "List the positive roots");
  roots->add_option("type", type_str, "Type string, e.g. A3 or E8")->required();
  add_common_flags(roots, opts, &max_rank_seen);

  auto* omega = app.add_subcommand(
      "omega", "List the roots that can generate abelian ideals");
  omega->add_option("type", type_str)->required();
  add_common_flags(omega, opts, &max_rank_seen);

  auto* hasse = app.add_subcommand(
      "hasse", "Emit the Hasse diagram of the restricted poset as DOT");
  hasse->add_option("type", type_str)->required();
  add_common_flags(hasse, opts, &max_rank_seen);

  auto* ideals = app.add_subcommand("ideals", "Enumerate abelian ideals");
  ideals->add_option("type", type_str)->required();
  ideals->add_option("mode", mode, "list, min-gens or dist (default dist)");
  add_common_flags(ideals, opts, &max_rank_seen);

  auto* genfun = app.add_subcommand(
      "genfun", "Closed-form dimension generating polynomial");
  genfun->add_option("type", type_str)->required();
  add_common_flags(genfun, opts, &max_rank_seen);

  auto* verify = app.add_subcommand(
      "verify", "Cross-check enumeration against the closed forms");
  verify->add_option("selector", selector, "Type string or \"all\"")
      ->required();
  add_common_flags(verify, opts, &max_rank_seen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opts.max_rank_given = max_rank_seen;

  if (roots->parsed()) {
    return abel::cli::cmd_roots(type_str, opts, std::cout, std::cerr);
  }
  if (omega->parsed()) {
    return abel::cli::cmd_omega(type_str, opts, std::cout, std::cerr);
  }
  if (hasse->parsed()) {
    return abel::cli::cmd_hasse(type_str, opts, std::cout, std::cerr);
  }
  if (ideals->parsed()) {
    return abel::cli::cmd_ideals(type_str, mode, opts, std::cout, std::cerr);
  }
  if (genfun->parsed()) {
    return abel::cli::cmd_genfun(type_str, opts, std::cout, std::cerr);
  }
  return abel::cli::cmd_verify(selector, opts, std::cout, std::cerr);
}
