#include "infoagree/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "infoagree/error.hpp"

namespace infoagree {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_integer_field(std::string_view f) {
  if (!f.empty() && f.front() == '-') f.remove_prefix(1);
  return !f.empty() && std::all_of(f.begin(), f.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string position(std::size_t line, std::size_t field) {
  return "line " + std::to_string(line) + ", field " + std::to_string(field);
}

Count parse_count(std::string_view f, std::size_t line, std::size_t field) {
  if (!is_integer_field(f)) {
    throw Error(ErrorKind::ParseError,
                position(line, field) + ": '" + std::string(f) +
                    "' is not an integer");
  }
  if (f.front() == '-') {
    // "-0" is still zero.
    if (f.find_first_not_of("-0") == std::string_view::npos) return 0;
    throw Error(ErrorKind::NegativeCell,
                position(line, field) + ": negative count " + std::string(f));
  }
  Count value = 0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc() || ptr != f.data() + f.size()) {
    throw Error(ErrorKind::ParseError,
                position(line, field) + ": count out of range");
  }
  return value;
}

struct CsvLine {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<CsvLine> split_lines(std::string_view text) {
  std::vector<CsvLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++number;
    if (trim(line).empty()) continue;
    CsvLine parsed{number, {}};
    while (true) {
      const auto comma = line.find(',');
      parsed.fields.push_back(trim(line.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    lines.push_back(std::move(parsed));
  }
  return lines;
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return ext;
}

}  // namespace

std::string_view to_string(InputFormat f) noexcept {
  return f == InputFormat::Csv ? "csv" : "json";
}

MatrixDocument parse_csv(std::string_view text, std::string source_path) {
  auto lines = split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorKind::ParseError, "CSV input is empty");
  }

  std::optional<std::vector<std::string>> labels;
  std::size_t first_data = 0;
  const auto& head = lines.front().fields;
  if (std::any_of(head.begin(), head.end(),
                  [](std::string_view f) { return !is_integer_field(f); })) {
    labels.emplace(head.begin(), head.end());
    first_data = 1;
  }
  if (first_data == lines.size()) {
    throw Error(ErrorKind::ParseError, "CSV input has a header but no rows");
  }

  const std::size_t width = lines[first_data].fields.size();
  std::vector<std::vector<Count>> rows;
  rows.reserve(lines.size() - first_data);
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.fields.size() != width) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line.number) + ": expected " +
                      std::to_string(width) + " fields, found " +
                      std::to_string(line.fields.size()));
    }
    auto& row = rows.emplace_back();
    row.reserve(width);
    for (std::size_t f = 0; f < width; ++f) {
      row.push_back(parse_count(line.fields[f], line.number, f + 1));
    }
  }

  auto matrix = AgreementMatrix::from_rows(rows);
  if (labels && labels->size() != matrix.size()) {
    throw Error(ErrorKind::ParseError,
                "header has " + std::to_string(labels->size()) +
                    " labels for " + std::to_string(matrix.size()) +
                    " classes");
  }
  return {std::move(source_path), InputFormat::Csv, std::move(labels),
          std::move(matrix)};
}

MatrixDocument parse_json(std::string_view text, std::string source_path) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::ParseError, "JSON input must be an object");
  }
  const auto it = doc.find("matrix");
  if (it == doc.end() || !it->is_array()) {
    throw Error(ErrorKind::ParseError, "\"matrix\" must be an array of rows");
  }

  std::vector<std::vector<Count>> rows;
  std::optional<std::size_t> width;
  for (std::size_t y = 0; y < it->size(); ++y) {
    const auto& jrow = (*it)[y];
    if (!jrow.is_array()) {
      throw Error(ErrorKind::ParseError,
                  "matrix row " + std::to_string(y + 1) + " is not an array");
    }
    if (width && jrow.size() != *width) {
      throw Error(ErrorKind::ParseError,
                  "matrix row " + std::to_string(y + 1) + " has " +
                      std::to_string(jrow.size()) + " entries, expected " +
                      std::to_string(*width));
    }
    width = jrow.size();
    auto& row = rows.emplace_back();
    for (std::size_t x = 0; x < jrow.size(); ++x) {
      const auto& v = jrow[x];
      const std::string where = "matrix[" + std::to_string(y) + "][" +
                                std::to_string(x) + "]";
      if (v.is_number_unsigned()) {
        row.push_back(v.get<Count>());
      } else if (v.is_number_integer()) {
        throw Error(ErrorKind::NegativeCell, where + " is negative");
      } else {
        throw Error(ErrorKind::ParseError,
                    where + " is not a nonnegative integer");
      }
    }
  }

  std::optional<std::vector<std::string>> labels;
  if (const auto lt = doc.find("labels"); lt != doc.end() && !lt->is_null()) {
    if (!lt->is_array() ||
        !std::all_of(lt->begin(), lt->end(),
                     [](const json& l) { return l.is_string(); })) {
      throw Error(ErrorKind::ParseError, "\"labels\" must be an array of strings");
    }
    labels = lt->get<std::vector<std::string>>();
  }

  auto matrix = AgreementMatrix::from_rows(rows);
  if (labels && labels->size() != matrix.size()) {
    throw Error(ErrorKind::ParseError,
                "\"labels\" has " + std::to_string(labels->size()) +
                    " entries for " + std::to_string(matrix.size()) +
                    " classes");
  }
  return {std::move(source_path), InputFormat::Json, std::move(labels),
          std::move(matrix)};
}

std::optional<InputFormat> format_from_extension(
    const std::filesystem::path& path) {
  const auto ext = lower_extension(path);
  if (ext == ".csv") return InputFormat::Csv;
  if (ext == ".json") return InputFormat::Json;
  return std::nullopt;
}

MatrixDocument load_document(const std::filesystem::path& path,
                             std::optional<InputFormat> format) {
  if (!format) format = format_from_extension(path);
  if (!format) {
    throw Error(ErrorKind::ParseError,
                path.string() + ": cannot infer format, use --format");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, path.string() + ": cannot open file");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return *format == InputFormat::Csv ? parse_csv(text, path.string())
                                     : parse_json(text, path.string());
}

std::string to_json(const AgreementMatrix& a,
                    const std::optional<std::vector<std::string>>& labels) {
  json doc = json::object();
  if (labels) doc["labels"] = *labels;
  doc["matrix"] = a.to_rows();
  return doc.dump();
}

}  // namespace infoagree
