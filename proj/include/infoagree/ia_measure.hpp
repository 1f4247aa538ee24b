#pragma once

#include <cstddef>
#include <string_view>

#include "infoagree/info_theory.hpp"
#include "infoagree/matrix.hpp"

namespace infoagree {

/// Which closed-form branch produced an IA_eps value.
enum class IaCase {
  DegenerateX,  // exactly one non-null column: H(X^) = 0
  DegenerateY,  // exactly one non-null row:    H(Y^) = 0
  RegularXMin,  // 0 < H(X^) <= H(Y^)
  RegularYMin,  // 0 < H(Y^) <  H(X^)
};

std::string_view to_string(IaCase c) noexcept;

/// IA_eps together with the quantities it was derived from. The entropies
/// are those of the refined marginals and refined joint, always computed.
struct IaResult {
  double value = 0.0;
  IaCase ia_case = IaCase::RegularXMin;
  std::size_t n = 0;
  std::size_t m = 0;  // non-null rows
  std::size_t l = 0;  // non-null columns
  Entropy h_x;
  Entropy h_y;
  Entropy h_xy;
};

/// Information agreement MI(X,Y) / min(H(X), H(Y)) on a matrix with no zero
/// cell, evaluated through the probability distributions.
/// Throws ContainsZero otherwise; use ia_epsilon for such matrices.
double ia_strict(const AgreementMatrix& a);

/// Limit of IA on the matrix obtained by replacing every zero with eps, as
/// eps -> 0+. Defined for every valid matrix:
///
///   one non-null column   ->  (n - m) / n
///   one non-null row      ->  (n - l) / n
///   H(X^) <= H(Y^)        ->  1 + (H(Y^) - H(X^Y^)) / H(X^)
///   otherwise             ->  1 + (H(X^) - H(X^Y^)) / H(Y^)
///
/// where ^ denotes restriction to the support. The column test runs first.
/// Runs in Theta(n^2).
IaResult ia_epsilon(const AgreementMatrix& a);

/// Slack for rounding excursions outside [0, 1] that get clamped; anything
/// larger is reported as an Internal error.
inline constexpr double kRangeSlack = 1e-9;

}  // namespace infoagree
