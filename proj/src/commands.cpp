#include "infoagree/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "infoagree/report.hpp"

namespace infoagree {

namespace {

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::Internal ? kExitInternalError
                                         : kExitInputError;
}

// Writes `text` to options.output when set, otherwise to `out`.
bool emit(const std::string& text, const CommonOptions& options,
          std::ostream& out, std::ostream& err) {
  if (!options.output) {
    out << text;
    out.flush();
    return true;
  }
  std::ofstream file(*options.output, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << "iagree: cannot write " << options.output->string() << '\n';
    return false;
  }
  return true;
}

// Runs `body`, translating exceptions into diagnostics and exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "iagree: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "iagree: Internal: " << e.what() << '\n';
    return kExitInternalError;
  }
}

std::string plain_sweep(const SweepSection& s) {
  std::string text;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    text += format_real(s.points[i].epsilon) + ' ' +
            format_real(s.points[i].ia_value) + ' ' +
            format_real(s.verdict.gaps[i]) + '\n';
  }
  text += s.verdict.passed ? "pass\n" : "fail\n";
  return text;
}

}  // namespace

int cmd_compute(const std::filesystem::path& path, const CommonOptions& options,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Report report = make_report(load_document(path, options.format));
    const std::string text = options.plain
                                 ? format_real(report.result.value) + '\n'
                                 : render_json(report) + '\n';
    return emit(text, options, out, err) ? kExitOk : kExitInputError;
  });
}

int cmd_sweep(const std::filesystem::path& path, const CommonOptions& options,
              const SweepOptions& sweep_options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (sweep_options.final_tol && !(*sweep_options.final_tol >= 0.0 &&
                                     std::isfinite(*sweep_options.final_tol))) {
      throw Error(ErrorKind::InvalidArgument,
                  "--final-tol must be a finite nonnegative number");
    }
    const auto grid = geometric_grid(sweep_options.eps_from,
                                     sweep_options.eps_to,
                                     sweep_options.eps_steps);
    const MatrixDocument doc = load_document(path, options.format);
    Report report = make_report(doc);

    SweepSection section;
    section.points = sweep(doc.matrix, grid);
    section.config = default_convergence_config(doc.matrix, report.result);
    if (sweep_options.final_tol) {
      section.config.final_tol = *sweep_options.final_tol;
    }
    section.verdict =
        check_convergence(section.points, report.result.value, section.config);
    const bool passed = section.verdict.passed;
    report.sweep = std::move(section);

    const std::string text = options.plain ? plain_sweep(*report.sweep)
                                           : render_json(report) + '\n';
    if (!emit(text, options, out, err)) return int{kExitInputError};
    return passed ? int{kExitOk} : int{kExitConvergenceFailure};
  });
}

int cmd_batch(const std::filesystem::path& dir, const CommonOptions& options,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    std::filesystem::directory_iterator it(dir, ec);
    if (ec) {
      throw Error(ErrorKind::Io,
                  dir.string() + ": cannot read directory: " + ec.message());
    }
    for (; it != std::filesystem::directory_iterator(); it.increment(ec)) {
      if (ec) break;
      std::error_code type_ec;
      if (it->is_regular_file(type_ec) && format_from_extension(it->path())) {
        files.push_back(it->path());
      }
    }
    if (ec) {
      throw Error(ErrorKind::Io,
                  dir.string() + ": cannot read directory: " + ec.message());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) {
                return a.filename().string() < b.filename().string();
              });

    bool all_ok = true;
    std::string text;
    for (const auto& file : files) {
      const auto format = options.format ? options.format
                                         : format_from_extension(file);
      try {
        const Report report = make_report(load_document(file, format));
        text += options.plain ? file.string() + ' ' +
                                    format_real(report.result.value)
                              : render_json(report);
      } catch (const Error& e) {
        all_ok = false;
        text += options.plain ? file.string() + " error " +
                                    std::string(to_string(e.kind())) + ": " +
                                    e.what()
                              : render_error_json(file.string(), format, e);
      }
      text += '\n';
    }
    if (!emit(text, options, out, err)) return int{kExitInputError};
    return all_ok ? int{kExitOk} : int{kExitInputError};
  });
}

}  // namespace infoagree
