#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoagree/document.hpp"
#include "infoagree/epsilon_oracle.hpp"
#include "infoagree/error.hpp"
#include "infoagree/ia_measure.hpp"

namespace infoagree {

inline constexpr std::string_view kToolName = "iagree";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct SweepSection {
  std::vector<EpsilonEvaluation> points;
  ConvergenceConfig config;
  ConvergenceReport verdict;
};

struct Report {
  std::string source_path;
  InputFormat format = InputFormat::Csv;
  std::optional<std::vector<std::string>> labels;
  IaResult result;
  std::optional<SweepSection> sweep;
};

Report make_report(const MatrixDocument& doc);

/// Single-line JSON object. Reals use 17 significant digits, so every
/// double survives a round trip bit for bit.
std::string render_json(const Report& r);

/// Single-line JSON error record for batch output.
std::string render_error_json(std::string_view source_path,
                              std::optional<InputFormat> format,
                              const Error& e);

/// "%.17g" of `v`.
std::string format_real(double v);

}  // namespace infoagree
