#include "infoagree/ia_measure.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include "infoagree/error.hpp"

namespace infoagree {

namespace {

double clamp_unit(double v) {
  if (v < -kRangeSlack || v > 1.0 + kRangeSlack || !std::isfinite(v)) {
    throw Error(ErrorKind::Internal,
                "information agreement " + std::to_string(v) +
                    " lies outside [0, 1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

std::vector<Count> positive_only(std::span<const Count> values) {
  std::vector<Count> out;
  out.reserve(values.size());
  for (Count v : values) {
    if (v > 0) out.push_back(v);
  }
  return out;
}

}  // namespace

std::string_view to_string(IaCase c) noexcept {
  switch (c) {
    case IaCase::DegenerateX: return "DegenerateX";
    case IaCase::DegenerateY: return "DegenerateY";
    case IaCase::RegularXMin: return "RegularXMin";
    case IaCase::RegularYMin: return "RegularYMin";
  }
  return "Unknown";
}

double ia_strict(const AgreementMatrix& a) {
  if (!a.strictly_positive()) {
    throw Error(ErrorKind::ContainsZero,
                "matrix contains a zero cell; IA is undefined, use IA_eps");
  }
  const auto px = refine(marginal_x(a));
  const auto py = refine(marginal_y(a));
  const auto pxy = refine(joint(a));
  const double mi = mutual_information(pxy, px, py).bits;
  const double h_min =
      std::min(shannon_entropy(px).bits, shannon_entropy(py).bits);
  return clamp_unit(mi / h_min);
}

IaResult ia_epsilon(const AgreementMatrix& a) {
  const std::size_t n = a.size();
  const auto cols = positive_only(col_sums(a));
  const auto rows = positive_only(row_sums(a));
  const auto cells = positive_only(a.cells());

  IaResult r;
  r.n = n;
  r.m = rows.size();
  r.l = cols.size();
  r.h_x = entropy_from_counts(cols);
  r.h_y = entropy_from_counts(rows);
  r.h_xy = entropy_from_counts(cells);

  const double nd = static_cast<double>(n);
  if (r.l == 1) {
    assert(r.h_x.bits < 1e-12);
    r.ia_case = IaCase::DegenerateX;
    r.value = (nd - static_cast<double>(r.m)) / nd;
    return r;
  }
  if (r.m == 1) {
    assert(r.h_y.bits < 1e-12);
    r.ia_case = IaCase::DegenerateY;
    r.value = (nd - static_cast<double>(r.l)) / nd;
    return r;
  }
  if (r.h_x <= r.h_y) {
    r.ia_case = IaCase::RegularXMin;
    r.value = clamp_unit(1.0 + (r.h_y.bits - r.h_xy.bits) / r.h_x.bits);
  } else {
    r.ia_case = IaCase::RegularYMin;
    r.value = clamp_unit(1.0 + (r.h_x.bits - r.h_xy.bits) / r.h_y.bits);
  }
  return r;
}

}  // namespace infoagree
