#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infoagree/ia_measure.hpp"
#include "infoagree/matrix.hpp"

namespace infoagree {

/// The 0-freed matrix A_eps at a concrete eps: zero cells of `base` become
/// eps, every other cell keeps its count.
class EpsilonMatrix {
 public:
  const AgreementMatrix& base() const noexcept { return base_; }
  double epsilon() const noexcept { return epsilon_; }
  std::size_t size() const noexcept { return base_.size(); }

  double at(std::size_t y, std::size_t x) const {
    const Count c = base_.at(y, x);
    return c > 0 ? static_cast<double>(c) : epsilon_;
  }
  /// Row-major copy of the n*n real-valued cells.
  std::vector<double> cells() const;

 private:
  friend EpsilonMatrix zero_freed(const AgreementMatrix& a, double eps);
  EpsilonMatrix(AgreementMatrix base, double eps)
      : base_(std::move(base)), epsilon_(eps) {}

  AgreementMatrix base_;
  double epsilon_;
};

/// Throws NonPositiveEpsilon unless eps is finite and > 0.
EpsilonMatrix zero_freed(const AgreementMatrix& a, double eps);

struct EpsilonEvaluation {
  double epsilon = 0.0;
  double ia_value = 0.0;
  double h_x = 0.0;
  double h_y = 0.0;
  double h_xy = 0.0;
};

/// IA of the all-positive matrix E evaluated from the definitions: entropy
/// of each distribution as -sum p log2 p and MI as the double sum
/// sum p(y,x) log2(p(y,x) / (p(y) p(x))), divided by the smaller marginal
/// entropy. Shares nothing with the closed form behind ia_epsilon.
///
/// Every sum of cells is carried as (integer part, number of eps cells), so
/// complements such as S - rowsum are exact before eps is substituted. This
/// keeps the value resolvable when eps is many orders of magnitude below
/// the counts. Throws InvalidArgument when the base total is 2^62 or more.
EpsilonEvaluation eval_ia_at(const EpsilonMatrix& e);

/// One evaluation per eps, in input order. `eps_values` must be positive and
/// strictly decreasing. Throws EmptySweep, NonPositiveEpsilon or
/// InvalidArgument.
std::vector<EpsilonEvaluation> sweep(const AgreementMatrix& a,
                                     std::span<const double> eps_values);

/// `steps` points from `from` down to `to`, evenly spaced in log10.
/// A single step yields just `from`.
std::vector<double> geometric_grid(double from, double to, std::size_t steps);

struct ConvergenceConfig {
  double final_tol = 1e-6;
  bool require_shrinking_tail = true;
};

struct ConvergenceReport {
  double target = 0.0;
  std::vector<double> gaps;  // |ia_value - target| per sweep point
  bool tail_shrinking = false;
  bool within_final_tol = false;
  bool passed = false;
};

/// tail_shrinking: the last gap is below the first (or the first is already
/// within kTailSlack of the target) and the last three gaps are
/// non-increasing within kTailSlack.
/// within_final_tol: last gap <= config.final_tol.
/// passed: within_final_tol, and tail_shrinking when the config requires it.
ConvergenceReport check_convergence(std::span<const EpsilonEvaluation> points,
                                    double target,
                                    const ConvergenceConfig& config);

inline constexpr double kTailSlack = 1e-12;

// Final-gap tolerances by regime. Regular limits close like eps*log(1/eps).
// The single-column/row limit closes like 1/ln(1/eps) with a constant that
// grows with n and with the spread of the counts: at eps = 1e-12 the gap is
// 0.0962 for n = 10 with one unit count, the largest seen for n <= 10 and
// counts in [1, 1000]. Count spreads of 1e4 and more need a smaller eps_to.
inline constexpr double kStrictFinalTol = 1e-12;
inline constexpr double kRegularFinalTol = 1e-6;
inline constexpr double kDegenerateFinalTol = 0.10;

/// Default verdict settings for a matrix whose closed-form result is `r`.
ConvergenceConfig default_convergence_config(const AgreementMatrix& a,
                                             const IaResult& r);

inline constexpr double kDefaultEpsFrom = 1e-2;
inline constexpr double kDefaultEpsTo = 1e-12;
inline constexpr std::size_t kDefaultEpsSteps = 11;

}  // namespace infoagree
