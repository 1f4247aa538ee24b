#include "infoagree/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace infoagree {

namespace {

std::string quoted(std::string_view s) {
  return nlohmann::json(std::string(s))
      .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

class ObjectWriter {
 public:
  ObjectWriter& raw(std::string_view key, std::string_view value) {
    out_ += first_ ? "{" : ",";
    first_ = false;
    out_ += quoted(key);
    out_ += ':';
    out_ += value;
    return *this;
  }
  ObjectWriter& str(std::string_view key, std::string_view value) {
    return raw(key, quoted(value));
  }
  ObjectWriter& real(std::string_view key, double value) {
    return raw(key, format_real(value));
  }
  ObjectWriter& integer(std::string_view key, std::size_t value) {
    return raw(key, std::to_string(value));
  }
  ObjectWriter& boolean(std::string_view key, bool value) {
    return raw(key, value ? "true" : "false");
  }
  std::string done() {
    if (first_) out_ += '{';
    out_ += '}';
    return std::move(out_);
  }

 private:
  std::string out_;
  bool first_ = true;
};

std::string input_object(std::string_view path,
                         std::optional<InputFormat> format,
                         const std::optional<std::vector<std::string>>& labels) {
  ObjectWriter w;
  w.str("path", path);
  w.raw("format", format ? quoted(to_string(*format)) : "null");
  w.raw("labels", labels ? nlohmann::json(*labels).dump() : "null");
  return w.done();
}

template <class T, class F>
std::string array_of(const std::vector<T>& items, F render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += render(items[i], i);
  }
  return out + "]";
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Report make_report(const MatrixDocument& doc) {
  return {doc.source_path, doc.format, doc.labels, ia_epsilon(doc.matrix),
          std::nullopt};
}

std::string render_json(const Report& r) {
  ObjectWriter w;
  w.str("tool", kToolName).str("version", kToolVersion);
  w.raw("input", input_object(r.source_path, r.format, r.labels));
  w.integer("n", r.result.n)
      .integer("m", r.result.m)
      .integer("l", r.result.l)
      .str("case", to_string(r.result.ia_case))
      .real("value", r.result.value)
      .real("h_x", r.result.h_x.bits)
      .real("h_y", r.result.h_y.bits)
      .real("h_xy", r.result.h_xy.bits);
  if (r.sweep) {
    const auto& s = *r.sweep;
    w.raw("sweep", array_of(s.points, [&](const EpsilonEvaluation& p,
                                          std::size_t i) {
      ObjectWriter pw;
      pw.real("epsilon", p.epsilon)
          .real("ia_value", p.ia_value)
          .real("gap", s.verdict.gaps[i])
          .real("h_x", p.h_x)
          .real("h_y", p.h_y)
          .real("h_xy", p.h_xy);
      return pw.done();
    }));
    ObjectWriter cw;
    cw.real("target", s.verdict.target)
        .real("final_tol", s.config.final_tol)
        .boolean("require_shrinking_tail", s.config.require_shrinking_tail)
        .boolean("tail_shrinking", s.verdict.tail_shrinking)
        .boolean("within_final_tol", s.verdict.within_final_tol)
        .boolean("passed", s.verdict.passed);
    w.raw("convergence", cw.done());
  }
  return w.done();
}

std::string render_error_json(std::string_view source_path,
                              std::optional<InputFormat> format,
                              const Error& e) {
  ObjectWriter err;
  err.str("kind", to_string(e.kind())).str("message", e.what());
  ObjectWriter w;
  w.str("tool", kToolName).str("version", kToolVersion);
  w.raw("input", input_object(source_path, format, std::nullopt));
  w.raw("error", err.done());
  return w.done();
}

}  // namespace infoagree
