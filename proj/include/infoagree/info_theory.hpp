#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "infoagree/matrix.hpp"

namespace infoagree {

/// One event of a finite distribution. Labels are opaque indices: marginals
/// use `first` for the class and leave `second` at 0; joints built from a
/// matrix use `first` = row (rater Y) and `second` = column (rater X).
struct Outcome {
  std::size_t first = 0;
  std::size_t second = 0;
  double p = 0.0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Probabilities are >= 0 and sum to 1.
class CategoricalDistribution {
 public:
  /// Throws InvalidArgument on negative/non-finite entries, an empty list or
  /// a total that is not 1.
  static CategoricalDistribution from_outcomes(std::vector<Outcome> outcomes);

  std::span<const Outcome> outcomes() const noexcept { return outcomes_; }
  std::size_t size() const noexcept { return outcomes_.size(); }

 private:
  explicit CategoricalDistribution(std::vector<Outcome> o)
      : outcomes_(std::move(o)) {}
  std::vector<Outcome> outcomes_;
};

/// A distribution restricted to its support: every probability is > 0.
class RefinedDistribution {
 public:
  /// Throws ZeroProbability if any entry is 0, otherwise validates like
  /// CategoricalDistribution::from_outcomes.
  static RefinedDistribution from_outcomes(std::vector<Outcome> outcomes);

  std::span<const Outcome> outcomes() const noexcept { return outcomes_; }
  std::size_t size() const noexcept { return outcomes_.size(); }

 private:
  friend RefinedDistribution refine(const CategoricalDistribution& d);
  explicit RefinedDistribution(std::vector<Outcome> o)
      : outcomes_(std::move(o)) {}
  std::vector<Outcome> outcomes_;
};

/// Entropy measured in bits.
struct Entropy {
  double bits = 0.0;

  friend auto operator<=>(const Entropy&, const Entropy&) = default;
};

/// p_X: column sums over the total (rater X).
CategoricalDistribution marginal_x(const AgreementMatrix& a);
/// p_Y: row sums over the total (rater Y).
CategoricalDistribution marginal_y(const AgreementMatrix& a);
/// p_XY over the n*n cells, row-major, labelled (row, column).
CategoricalDistribution joint(const AgreementMatrix& a);

/// Drops zero-probability events; the rest keep their labels and values.
RefinedDistribution refine(const CategoricalDistribution& d);

Entropy shannon_entropy(const RefinedDistribution& d);
/// Throws ZeroProbability when `d` still contains a zero; refine first.
Entropy shannon_entropy(const CategoricalDistribution& d);

/// H = log2(c) - (1/c) * sum(w * log2(w)) for positive weights summing to c.
/// Throws NonPositiveWeight or InconsistentTotal.
Entropy entropy_from_counts(std::span<const double> weights, double c);
/// Integer variant; c is the exact sum of the counts.
Entropy entropy_from_counts(std::span<const Count> counts);

/// H(second | first) by the double sum over the joint.
/// `marginal_first` must match the joint's marginal over `first`.
Entropy conditional_entropy(const RefinedDistribution& joint,
                            const RefinedDistribution& marginal_first);

/// MI by the double sum over the joint, in bits. `mx` is the marginal over
/// the joint's `second` label, `my` over its `first` label.
/// Throws InconsistentMarginal when either marginal disagrees with the joint.
Entropy mutual_information(const RefinedDistribution& joint,
                           const RefinedDistribution& mx,
                           const RefinedDistribution& my);

/// Absolute per-entry tolerance used when checking a marginal against a joint.
inline constexpr double kMarginalTolerance = 1e-9;

}  // namespace infoagree
