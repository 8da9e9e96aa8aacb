#include "CLI11.hpp"

#include <iostream>
#include <string>

#include "seqconv/cli.hpp"

namespace {

using seqconv::cli::CliConfig;
using seqconv::cli::Command;

struct RawRanges {
  std::string r = "1..4";
  std::string n = "0..20";
};

void add_selection_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--id", cfg.ids, "Identity id (repeatable; default: whole catalog)");
  cmd->add_option("--tag", cfg.tags,
                  "Select entries carrying any of these tags (e.g. theorem-derived, "
                  "as-printed-example, chebyshev, carlitz)");
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format: table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seqconv: exact verification of convolution identities for second-order "
               "recurrence sequences and Chebyshev polynomials"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value config file");

  CliConfig cfg;
  RawRanges ranges;
  std::string format = "table";

  CLI::App* verify = app.add_subcommand("verify", "Sweep identities over (r, n) ranges");
  verify->add_flag("--all", "Sweep the whole catalog (the default when no --id/--tag is given)");
  add_selection_options(verify, cfg);
  verify->add_option("--r", ranges.r, "Stride range a..b (inclusive, negatives allowed)");
  verify->add_option("--n", ranges.n, "Index range a..b (inclusive)");
  add_format_option(verify, format);
  verify->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first failing cell");
  verify->add_option("--workers", cfg.workers,
                     "Worker threads (default: SEQCONV_WORKERS or 1; 1 = sequential)");
  verify->add_flag("--no-header", cfg.no_header, "Suppress the timestamp header line");

  CLI::App* list = app.add_subcommand("list", "List the identity catalog");
  add_selection_options(list, cfg);
  add_format_option(list, format);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one sequence value");
  eval->add_option("--sequence", cfg.sequence,
                   "Named sequence: fibonacci, lucas, pell, pell_lucas, jacobsthal, "
                   "jacobsthal_lucas, balancing, lucas_balancing");
  eval->add_option("--params", cfg.params, "Custom Horadam parameters a,b,p,q (overrides --sequence)");
  eval->add_option("--index", cfg.index, "Integer index (negatives allowed)")->required();

  CLI::App* conv = app.add_subcommand("conv", "Evaluate one convolution sum");
  conv->add_option("--f", cfg.f_name, "First named sequence")->required();
  conv->add_option("--g", cfg.g_name, "Second named sequence")->required();
  conv->add_option("--r", cfg.conv_r, "Stride r");
  conv->add_option("--n", cfg.conv_n, "Upper summation index n")->required();

  CLI::App* cheb = app.add_subcommand("cheb", "Print Chebyshev polynomial coefficients");
  cheb->add_option("--kind", cfg.cheb_kind, "t (first kind) or u (second kind)")->required();
  cheb->add_option("--degree", cfg.cheb_degree, "Integer index (negatives allowed)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) {
    cfg.command = Command::verify;
    auto rr = seqconv::cli::parse_range(ranges.r);
    auto nr = seqconv::cli::parse_range(ranges.n);
    if (!rr || !nr) {
      std::cerr << "error: malformed range (expected a..b with a <= b)\n";
      return 2;
    }
    cfg.r_range = *rr;
    cfg.n_range = *nr;
  } else if (list->parsed()) {
    cfg.command = Command::list;
  } else if (eval->parsed()) {
    cfg.command = Command::eval;
    if (cfg.sequence.empty() && cfg.params.empty()) {
      std::cerr << "error: eval needs --sequence or --params\n";
      return 2;
    }
  } else if (conv->parsed()) {
    cfg.command = Command::conv;
  } else if (cheb->parsed()) {
    cfg.command = Command::cheb;
  }

  if (auto f = seqconv::cli::parse_format(format)) {
    cfg.format = *f;
  } else {
    std::cerr << "error: unknown format '" << format << "'\n";
    return 2;
  }

  return seqconv::cli::run(cfg, std::cout, std::cerr);
}
