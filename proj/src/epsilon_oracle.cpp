#include "infoagree/epsilon_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "infoagree/error.hpp"

namespace infoagree {

namespace {

__extension__ typedef __int128 Wide;

// A sum of cells of the 0-freed matrix: `count` from nonzero base cells plus
// `eps_cells` copies of eps. Exact under + and -.
struct EpsSum {
  Wide count = 0;
  Wide eps_cells = 0;

  EpsSum& operator+=(const EpsSum& o) {
    count += o.count;
    eps_cells += o.eps_cells;
    return *this;
  }
  friend EpsSum operator+(EpsSum a, const EpsSum& b) { return a += b; }
  friend EpsSum operator-(EpsSum a, const EpsSum& b) {
    a.count -= b.count;
    a.eps_cells -= b.eps_cells;
    return a;
  }

  double at(double eps) const {
    return static_cast<double>(count) + static_cast<double>(eps_cells) * eps;
  }
};

// (a0 + a1 e)(b0 + b1 e) - (c0 + c1 e)(d0 + d1 e), coefficients exact,
// evaluated at e.
double product_difference(const EpsSum& a, const EpsSum& b, const EpsSum& c,
                          const EpsSum& d, double eps) {
  const Wide k0 = a.count * b.count - c.count * d.count;
  const Wide k1 = a.count * b.eps_cells + a.eps_cells * b.count -
                  c.count * d.eps_cells - c.eps_cells * d.count;
  const Wide k2 = a.eps_cells * b.eps_cells - c.eps_cells * d.eps_cells;
  return static_cast<double>(k0) +
         (static_cast<double>(k1) + static_cast<double>(k2) * eps) * eps;
}

// ln(v / total), switching to log1p of the exact complement when v holds
// most of the mass.
double log_share(const EpsSum& v, const EpsSum& total, double eps) {
  const double vd = v.at(eps);
  const double td = total.at(eps);
  if (2.0 * vd > td) return std::log1p(-(total - v).at(eps) / td);
  return std::log(vd / td);
}

double entropy_bits(std::span<const EpsSum> parts, const EpsSum& total,
                    double eps) {
  const double td = total.at(eps);
  double h = 0.0;
  for (const auto& v : parts) h -= v.at(eps) / td * log_share(v, total, eps);
  return std::max(h / std::numbers::ln2, 0.0);
}

EpsSum cell_of(const AgreementMatrix& a, std::size_t y, std::size_t x) {
  const Count c = a.at(y, x);
  return c > 0 ? EpsSum{static_cast<Wide>(c), 0} : EpsSum{0, 1};
}

void check_epsilon(double eps) {
  if (!std::isfinite(eps) || !(eps > 0.0)) {
    throw Error(ErrorKind::NonPositiveEpsilon,
                "epsilon must be a positive finite number, got " +
                    std::to_string(eps));
  }
}

}  // namespace

std::vector<double> EpsilonMatrix::cells() const {
  std::vector<double> out;
  out.reserve(size() * size());
  for (std::size_t y = 0; y < size(); ++y) {
    for (std::size_t x = 0; x < size(); ++x) out.push_back(at(y, x));
  }
  return out;
}

EpsilonMatrix zero_freed(const AgreementMatrix& a, double eps) {
  check_epsilon(eps);
  return EpsilonMatrix(a, eps);
}

EpsilonEvaluation eval_ia_at(const EpsilonMatrix& e) {
  const AgreementMatrix& a = e.base();
  if (a.total() >= (Count{1} << 62)) {
    throw Error(ErrorKind::InvalidArgument,
                "epsilon oracle needs a matrix total below 2^62");
  }
  const std::size_t n = a.size();
  const double eps = e.epsilon();

  std::vector<EpsSum> rows(n), cols(n), cells;
  cells.reserve(n * n);
  EpsSum total;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const EpsSum c = cell_of(a, y, x);
      rows[y] += c;
      cols[x] += c;
      total += c;
      cells.push_back(c);
    }
  }

  EpsilonEvaluation out;
  out.epsilon = eps;
  out.h_x = entropy_bits(cols, total, eps);
  out.h_y = entropy_bits(rows, total, eps);
  out.h_xy = entropy_bits(cells, total, eps);

  // MI = (1/S) sum c ln(cS / (r k)), with cS - rk rewritten as
  // c*R - (r - c)(k - c), R the mass outside row y and column x, so the
  // argument of log1p is exact up to the final rounding.
  const double td = total.at(eps);
  double mi = 0.0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      const EpsSum& c = cells[y * n + x];
      const EpsSum rest = total - rows[y] - cols[x] + c;
      const double d =
          product_difference(c, rest, rows[y] - c, cols[x] - c, eps);
      const double rk = rows[y].at(eps) * cols[x].at(eps);
      mi += c.at(eps) * std::log1p(d / rk);
    }
  }
  mi /= td * std::numbers::ln2;

  const double h_min = std::min(out.h_x, out.h_y);
  if (!(h_min > 0.0)) {
    throw Error(ErrorKind::Internal,
                "marginal entropy vanished at epsilon " + std::to_string(eps));
  }
  const double v = mi / h_min;
  if (v < -kRangeSlack || v > 1.0 + kRangeSlack || !std::isfinite(v)) {
    throw Error(ErrorKind::Internal,
                "IA at epsilon " + std::to_string(eps) + " is " +
                    std::to_string(v));
  }
  out.ia_value = std::clamp(v, 0.0, 1.0);
  return out;
}

std::vector<EpsilonEvaluation> sweep(const AgreementMatrix& a,
                                     std::span<const double> eps_values) {
  if (eps_values.empty()) {
    throw Error(ErrorKind::EmptySweep, "sweep needs at least one epsilon");
  }
  for (std::size_t i = 0; i < eps_values.size(); ++i) {
    check_epsilon(eps_values[i]);
    if (i > 0 && !(eps_values[i] < eps_values[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "epsilon values must be strictly decreasing");
    }
  }
  std::vector<EpsilonEvaluation> out;
  out.reserve(eps_values.size());
  for (double eps : eps_values) out.push_back(eval_ia_at(zero_freed(a, eps)));
  return out;
}

std::vector<double> geometric_grid(double from, double to, std::size_t steps) {
  check_epsilon(from);
  check_epsilon(to);
  if (steps == 0) {
    throw Error(ErrorKind::EmptySweep, "epsilon grid needs at least one step");
  }
  if (steps == 1) return {from};
  if (!(to < from)) {
    throw Error(ErrorKind::InvalidArgument,
                "grid must run from a larger to a smaller epsilon");
  }
  const double lo = std::log10(from);
  const double hi = std::log10(to);
  std::vector<double> grid;
  grid.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    grid.push_back(std::pow(10.0, lo + (hi - lo) * t));
  }
  grid.front() = from;
  grid.back() = to;
  return grid;
}

ConvergenceReport check_convergence(std::span<const EpsilonEvaluation> points,
                                    double target,
                                    const ConvergenceConfig& config) {
  if (points.empty()) {
    throw Error(ErrorKind::EmptySweep, "no sweep points to check");
  }
  ConvergenceReport r;
  r.target = target;
  r.gaps.reserve(points.size());
  for (const auto& p : points) r.gaps.push_back(std::abs(p.ia_value - target));

  const auto& g = r.gaps;
  const bool closer_than_start = g.back() < g.front() || g.front() <= kTailSlack;
  bool tail_monotone = true;
  const std::size_t tail_start = g.size() >= 3 ? g.size() - 3 : 0;
  for (std::size_t i = tail_start + 1; i < g.size(); ++i) {
    if (g[i] > g[i - 1] + kTailSlack) tail_monotone = false;
  }
  r.tail_shrinking = closer_than_start && tail_monotone;
  r.within_final_tol = g.back() <= config.final_tol;
  r.passed = r.within_final_tol &&
             (!config.require_shrinking_tail || r.tail_shrinking);
  return r;
}

ConvergenceConfig default_convergence_config(const AgreementMatrix& a,
                                             const IaResult& r) {
  if (a.strictly_positive()) return {kStrictFinalTol, true};
  switch (r.ia_case) {
    case IaCase::DegenerateX:
    case IaCase::DegenerateY:
      return {kDegenerateFinalTol, true};
    case IaCase::RegularXMin:
    case IaCase::RegularYMin:
      break;
  }
  return {kRegularFinalTol, true};
}

}  // namespace infoagree
