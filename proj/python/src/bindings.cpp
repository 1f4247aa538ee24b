#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "infoagree/document.hpp"
#include "infoagree/epsilon_oracle.hpp"
#include "infoagree/error.hpp"
#include "infoagree/ia_measure.hpp"
#include "infoagree/info_theory.hpp"
#include "infoagree/matrix.hpp"
#include "infoagree/report.hpp"

namespace py = pybind11;
using namespace infoagree;

namespace {

std::vector<double> ia_values(const std::vector<EpsilonEvaluation>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.ia_value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Information agreement (IA and IA_eps) between two raters";

  // Library errors surface as InfoAgreeError(ValueError) with a `kind`
  // attribute naming the failure, e.g. "AllZero".
  static py::handle error_type = py::exception<Error>(m, "InfoAgreeError",
                                                      PyExc_ValueError)
                                     .release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error_type)(e.what());
      instance.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<AgreementMatrix>(m, "AgreementMatrix",
                              "Square count matrix; rows are rater Y, "
                              "columns rater X.")
      .def(py::init(&AgreementMatrix::from_signed_rows), py::arg("rows"))
      .def_property_readonly("n", &AgreementMatrix::size)
      .def_property_readonly("total", &AgreementMatrix::total)
      .def("rows", &AgreementMatrix::to_rows)
      .def("transpose", &AgreementMatrix::transposed)
      .def("strictly_positive", &AgreementMatrix::strictly_positive)
      .def(py::self == py::self)
      .def("__repr__", [](const AgreementMatrix& a) {
        return "AgreementMatrix(" + std::string(py::str(py::cast(a.to_rows()))) +
               ")";
      });

  m.def("row_sums", &row_sums, py::arg("matrix"));
  m.def("col_sums", &col_sums, py::arg("matrix"));
  m.def("count_non_null_rows", &count_non_null_rows, py::arg("matrix"));
  m.def("count_non_null_cols", &count_non_null_cols, py::arg("matrix"));

  m.def(
      "shannon_entropy",
      [](const std::vector<double>& probs) {
        std::vector<Outcome> outs;
        for (std::size_t i = 0; i < probs.size(); ++i) outs.push_back({i, 0, probs[i]});
        return shannon_entropy(RefinedDistribution::from_outcomes(std::move(outs)))
            .bits;
      },
      py::arg("probs"), "Entropy in bits of a strictly positive distribution.");
  m.def(
      "entropy_from_counts",
      [](const std::vector<double>& weights, double total) {
        return entropy_from_counts(weights, total).bits;
      },
      py::arg("weights"), py::arg("total"));

  py::enum_<IaCase>(m, "IaCase")
      .value("DegenerateX", IaCase::DegenerateX)
      .value("DegenerateY", IaCase::DegenerateY)
      .value("RegularXMin", IaCase::RegularXMin)
      .value("RegularYMin", IaCase::RegularYMin);

  py::class_<IaResult>(m, "IaResult")
      .def_readonly("value", &IaResult::value)
      .def_readonly("case", &IaResult::ia_case)
      .def_readonly("n", &IaResult::n)
      .def_readonly("m", &IaResult::m)
      .def_readonly("l", &IaResult::l)
      .def_property_readonly("h_x", [](const IaResult& r) { return r.h_x.bits; })
      .def_property_readonly("h_y", [](const IaResult& r) { return r.h_y.bits; })
      .def_property_readonly("h_xy",
                             [](const IaResult& r) { return r.h_xy.bits; })
      .def("__repr__", [](const IaResult& r) {
        return "IaResult(value=" + format_real(r.value) + ", case=" +
               std::string(to_string(r.ia_case)) + ", m=" +
               std::to_string(r.m) + ", l=" + std::to_string(r.l) + ")";
      });

  m.def("ia_strict", &ia_strict, py::arg("matrix"));
  m.def("ia_epsilon", &ia_epsilon, py::arg("matrix"));

  py::class_<EpsilonEvaluation>(m, "EpsilonEvaluation")
      .def_readonly("epsilon", &EpsilonEvaluation::epsilon)
      .def_readonly("ia_value", &EpsilonEvaluation::ia_value)
      .def_readonly("h_x", &EpsilonEvaluation::h_x)
      .def_readonly("h_y", &EpsilonEvaluation::h_y)
      .def_readonly("h_xy", &EpsilonEvaluation::h_xy);

  m.def(
      "zero_freed_cells",
      [](const AgreementMatrix& a, double eps) { return zero_freed(a, eps).cells(); },
      py::arg("matrix"), py::arg("epsilon"),
      "Row-major cells of the matrix with every zero replaced by epsilon.");
  m.def(
      "eval_ia_at",
      [](const AgreementMatrix& a, double eps) {
        return eval_ia_at(zero_freed(a, eps));
      },
      py::arg("matrix"), py::arg("epsilon"));
  m.def(
      "sweep",
      [](const AgreementMatrix& a, const std::vector<double>& eps) {
        return sweep(a, eps);
      },
      py::arg("matrix"), py::arg("eps_values"));
  m.def("geometric_grid", &geometric_grid, py::arg("eps_from") = kDefaultEpsFrom,
        py::arg("eps_to") = kDefaultEpsTo, py::arg("steps") = kDefaultEpsSteps);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("target", &ConvergenceReport::target)
      .def_readonly("gaps", &ConvergenceReport::gaps)
      .def_readonly("tail_shrinking", &ConvergenceReport::tail_shrinking)
      .def_readonly("within_final_tol", &ConvergenceReport::within_final_tol)
      .def_readonly("passed", &ConvergenceReport::passed);

  m.def(
      "check_convergence",
      [](const std::vector<EpsilonEvaluation>& points, double target,
         double final_tol, bool require_shrinking_tail) {
        return check_convergence(points, target,
                                 {final_tol, require_shrinking_tail});
      },
      py::arg("points"), py::arg("target"), py::arg("final_tol"),
      py::arg("require_shrinking_tail") = true);
  m.def("ia_values", &ia_values, py::arg("points"));

  py::class_<MatrixDocument>(m, "MatrixDocument")
      .def_readonly("source_path", &MatrixDocument::source_path)
      .def_property_readonly("format",
                             [](const MatrixDocument& d) {
                               return std::string(to_string(d.format));
                             })
      .def_readonly("labels", &MatrixDocument::labels)
      .def_readonly("matrix", &MatrixDocument::matrix);

  m.def(
      "parse_csv",
      [](const std::string& text) { return parse_csv(text); }, py::arg("text"));
  m.def(
      "parse_json",
      [](const std::string& text) { return parse_json(text); }, py::arg("text"));
  m.def(
      "to_json",
      [](const AgreementMatrix& a,
         const std::optional<std::vector<std::string>>& labels) {
        return to_json(a, labels);
      },
      py::arg("matrix"), py::arg("labels") = py::none());

  m.attr("__version__") = std::string(kToolVersion);
}
