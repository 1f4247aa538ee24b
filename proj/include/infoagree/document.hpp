#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoagree/matrix.hpp"

namespace infoagree {

enum class InputFormat { Csv, Json };

std::string_view to_string(InputFormat f) noexcept;

/// A matrix read from a file, rows = rater Y, columns = rater X.
struct MatrixDocument {
  std::string source_path;
  InputFormat format = InputFormat::Csv;
  std::optional<std::vector<std::string>> labels;  // n class names
  AgreementMatrix matrix;
};

/// n lines of n comma-separated nonnegative integers. A first line holding
/// any non-numeric field is taken as the class labels. Blank lines are
/// skipped; fields are trimmed. Throws ParseError (with line and field
/// position) or any AgreementMatrix construction error.
MatrixDocument parse_csv(std::string_view text, std::string source_path = {});

/// {"labels": [...], "matrix": [[...], ...]} with "labels" optional.
MatrixDocument parse_json(std::string_view text, std::string source_path = {});

/// Format implied by a .csv / .json extension (case-insensitive).
std::optional<InputFormat> format_from_extension(
    const std::filesystem::path& path);

/// Reads and parses `path`. Throws Io when the file cannot be read and
/// ParseError when no format is given and the extension is unknown.
MatrixDocument load_document(const std::filesystem::path& path,
                             std::optional<InputFormat> format = std::nullopt);

/// Serializes to the JSON input format; parse_json reads it back unchanged.
std::string to_json(const AgreementMatrix& a,
                    const std::optional<std::vector<std::string>>& labels =
                        std::nullopt);

}  // namespace infoagree
