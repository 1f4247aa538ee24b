// iagree: information agreement (IA_eps) of two raters' agreement matrices.
//
//   iagree compute <file>   closed-form IA_eps report
//   iagree sweep <file>     report plus eps -> 0 convergence check
//   iagree batch <dir>      one JSON line per .csv/.json file
//
// Matrix rows are rater Y's classes, columns are rater X's classes.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "infoagree/commands.hpp"
#include "infoagree/report.hpp"

int main(int argc, char** argv) {
  using namespace infoagree;

  CLI::App app{"Information agreement between two raters (IA_eps)", "iagree"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOptions common;
  std::optional<InputFormat> format;
  const std::map<std::string, InputFormat> formats{{"csv", InputFormat::Csv},
                                                   {"json", InputFormat::Json}};
  std::string output;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Input format (default: by extension)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_flag("--plain", common.plain, "Plain-text output");
    cmd->add_option("--output", output, "Write the result to this file");
  };

  std::string input;
  auto* compute = app.add_subcommand("compute", "Compute IA_eps for a matrix");
  compute->add_option("input", input, "Matrix file (.csv or .json)")
      ->required();
  add_common(compute);

  SweepOptions sweep_options;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Check IA(A_eps) converges to IA_eps");
  sweep_cmd->add_option("input", input, "Matrix file (.csv or .json)")
      ->required();
  add_common(sweep_cmd);
  sweep_cmd->add_option("--eps-from", sweep_options.eps_from,
                        "Largest epsilon")
      ->capture_default_str();
  sweep_cmd->add_option("--eps-to", sweep_options.eps_to, "Smallest epsilon")
      ->capture_default_str();
  sweep_cmd->add_option("--eps-steps", sweep_options.eps_steps,
                        "Number of geometric grid points")
      ->capture_default_str();
  sweep_cmd->add_option("--final-tol", sweep_options.final_tol,
                        "Allowed final gap (default: by regime)");

  std::string dir;
  auto* batch = app.add_subcommand("batch", "Compute IA_eps for every file");
  batch->add_option("dir", dir, "Directory of .csv/.json matrices")
      ->required();
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  common.format = format;
  if (!output.empty()) common.output = output;

  if (*compute) return cmd_compute(input, common, std::cout, std::cerr);
  if (*sweep_cmd) {
    return cmd_sweep(input, common, sweep_options, std::cout, std::cerr);
  }
  return cmd_batch(dir, common, std::cout, std::cerr);
}
