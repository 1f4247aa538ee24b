#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "infoagree/document.hpp"
#include "infoagree/epsilon_oracle.hpp"

namespace infoagree {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitInternalError = 2,
  kExitConvergenceFailure = 3,
};

struct CommonOptions {
  std::optional<InputFormat> format;  // default: by file extension
  bool plain = false;
  std::optional<std::filesystem::path> output;  // default: the `out` stream
};

struct SweepOptions {
  double eps_from = kDefaultEpsFrom;
  double eps_to = kDefaultEpsTo;
  std::size_t eps_steps = kDefaultEpsSteps;
  std::optional<double> final_tol;  // default: by regime
};

// Each command writes its result to `out` (or to options.output) and
// diagnostics to `err`, and returns the process exit status.

/// IA_eps report for one matrix file.
int cmd_compute(const std::filesystem::path& path, const CommonOptions& options,
                std::ostream& out, std::ostream& err);

/// IA_eps report plus the eps sweep table and convergence verdict.
/// Returns kExitConvergenceFailure when the verdict fails.
int cmd_sweep(const std::filesystem::path& path, const CommonOptions& options,
              const SweepOptions& sweep_options, std::ostream& out,
              std::ostream& err);

/// One JSON line per .csv/.json file of `dir`, in lexicographic order.
/// Per-file failures become error records; exit status is 1 if any failed.
int cmd_batch(const std::filesystem::path& dir, const CommonOptions& options,
              std::ostream& out, std::ostream& err);

}  // namespace infoagree
