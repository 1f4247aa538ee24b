#include "infoagree/info_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infoagree/error.hpp"

namespace infoagree {

namespace {

constexpr double kUnitSumTolerance = 1e-12;

// Rounding in a plain left-to-right sum grows with the number of terms, so
// the unit-sum check widens by one ulp per entry beyond the base tolerance.
double unit_sum_tolerance(std::size_t terms) {
  return kUnitSumTolerance +
         static_cast<double>(terms) * std::numeric_limits<double>::epsilon();
}

void validate(const std::vector<Outcome>& outcomes) {
  if (outcomes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "distribution has no outcomes");
  }
  double sum = 0.0;
  for (const auto& o : outcomes) {
    if (!std::isfinite(o.p) || o.p < 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "probability must be finite and nonnegative");
    }
    sum += o.p;
  }
  if (std::abs(sum - 1.0) > unit_sum_tolerance(outcomes.size())) {
    throw Error(ErrorKind::InvalidArgument,
                "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

CategoricalDistribution from_sums(const std::vector<Count>& sums, Count total) {
  const double t = static_cast<double>(total);
  std::vector<Outcome> out;
  out.reserve(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    out.push_back({i, 0, static_cast<double>(sums[i]) / t});
  }
  return CategoricalDistribution::from_outcomes(std::move(out));
}

double entropy_bits(std::span<const Outcome> outcomes) {
  double h = 0.0;
  for (const auto& o : outcomes) h -= o.p * std::log2(o.p);
  return std::max(h, 0.0);
}

// Dense lookup table label -> probability; NaN marks labels absent from `d`.
std::vector<double> dense_by_first(const RefinedDistribution& d) {
  std::size_t max_label = 0;
  for (const auto& o : d.outcomes()) max_label = std::max(max_label, o.first);
  std::vector<double> table(max_label + 1,
                            std::numeric_limits<double>::quiet_NaN());
  for (const auto& o : d.outcomes()) table[o.first] = o.p;
  return table;
}

double lookup(const std::vector<double>& table, std::size_t label) {
  if (label >= table.size() || std::isnan(table[label])) {
    throw Error(ErrorKind::InconsistentMarginal,
                "joint label " + std::to_string(label) +
                    " missing from marginal");
  }
  return table[label];
}

// Aggregates the joint over one of its labels and compares to `table`.
template <class Key>
void check_marginal(const RefinedDistribution& joint,
                    const std::vector<double>& table, Key key) {
  std::vector<double> agg(table.size(), 0.0);
  for (const auto& o : joint.outcomes()) {
    const std::size_t k = key(o);
    lookup(table, k);
    agg[k] += o.p;
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (std::isnan(table[k])) continue;
    if (std::abs(agg[k] - table[k]) > kMarginalTolerance) {
      throw Error(ErrorKind::InconsistentMarginal,
                  "marginal at label " + std::to_string(k) + " is " +
                      std::to_string(table[k]) + " but joint gives " +
                      std::to_string(agg[k]));
    }
  }
}

}  // namespace

CategoricalDistribution CategoricalDistribution::from_outcomes(
    std::vector<Outcome> outcomes) {
  validate(outcomes);
  return CategoricalDistribution(std::move(outcomes));
}

RefinedDistribution RefinedDistribution::from_outcomes(
    std::vector<Outcome> outcomes) {
  validate(outcomes);
  for (const auto& o : outcomes) {
    if (!(o.p > 0.0)) {
      throw Error(ErrorKind::ZeroProbability,
                  "refined distribution contains a zero probability");
    }
  }
  return RefinedDistribution(std::move(outcomes));
}

CategoricalDistribution marginal_x(const AgreementMatrix& a) {
  return from_sums(col_sums(a), a.total());
}

CategoricalDistribution marginal_y(const AgreementMatrix& a) {
  return from_sums(row_sums(a), a.total());
}

CategoricalDistribution joint(const AgreementMatrix& a) {
  const std::size_t n = a.size();
  const double t = static_cast<double>(a.total());
  std::vector<Outcome> out;
  out.reserve(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    auto r = a.row(y);
    for (std::size_t x = 0; x < n; ++x) {
      out.push_back({y, x, static_cast<double>(r[x]) / t});
    }
  }
  return CategoricalDistribution::from_outcomes(std::move(out));
}

RefinedDistribution refine(const CategoricalDistribution& d) {
  std::vector<Outcome> support;
  support.reserve(d.size());
  for (const auto& o : d.outcomes()) {
    if (o.p > 0.0) support.push_back(o);
  }
  return RefinedDistribution(std::move(support));
}

Entropy shannon_entropy(const RefinedDistribution& d) {
  if (d.size() == 1) return {0.0};
  return {entropy_bits(d.outcomes())};
}

Entropy shannon_entropy(const CategoricalDistribution& d) {
  for (const auto& o : d.outcomes()) {
    if (o.p == 0.0) {
      throw Error(ErrorKind::ZeroProbability,
                  "entropy of an unrefined distribution with a zero entry");
    }
  }
  if (d.size() == 1) return {0.0};
  return {entropy_bits(d.outcomes())};
}

Entropy entropy_from_counts(std::span<const double> weights, double c) {
  if (weights.empty()) {
    throw Error(ErrorKind::NonPositiveWeight, "no weights given");
  }
  double sum = 0.0;
  double weighted_log = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::NonPositiveWeight,
                  "weight " + std::to_string(w) + " is not positive");
    }
    sum += w;
    weighted_log += w * std::log2(w);
  }
  if (!(c > 0.0) ||
      std::abs(c - sum) > kUnitSumTolerance * std::max(1.0, std::abs(c))) {
    throw Error(ErrorKind::InconsistentTotal,
                "total " + std::to_string(c) + " differs from weight sum " +
                    std::to_string(sum));
  }
  if (weights.size() == 1) return {0.0};
  return {std::max(std::log2(c) - weighted_log / c, 0.0)};
}

Entropy entropy_from_counts(std::span<const Count> counts) {
  if (counts.empty()) {
    throw Error(ErrorKind::NonPositiveWeight, "no counts given");
  }
  Count total = 0;
  double weighted_log = 0.0;
  for (Count k : counts) {
    if (k == 0) {
      throw Error(ErrorKind::NonPositiveWeight, "count is zero");
    }
    if (k > std::numeric_limits<Count>::max() - total) {
      throw Error(ErrorKind::Overflow, "sum of counts exceeds 2^64 - 1");
    }
    total += k;
    const double w = static_cast<double>(k);
    weighted_log += w * std::log2(w);
  }
  if (counts.size() == 1) return {0.0};
  const double c = static_cast<double>(total);
  return {std::max(std::log2(c) - weighted_log / c, 0.0)};
}

Entropy conditional_entropy(const RefinedDistribution& joint,
                            const RefinedDistribution& marginal_first) {
  const auto table = dense_by_first(marginal_first);
  check_marginal(joint, table, [](const Outcome& o) { return o.first; });
  double h = 0.0;
  for (const auto& o : joint.outcomes()) {
    h -= o.p * std::log2(o.p / table[o.first]);
  }
  return {std::max(h, 0.0)};
}

Entropy mutual_information(const RefinedDistribution& joint,
                           const RefinedDistribution& mx,
                           const RefinedDistribution& my) {
  const auto px = dense_by_first(mx);
  const auto py = dense_by_first(my);
  check_marginal(joint, px, [](const Outcome& o) { return o.second; });
  check_marginal(joint, py, [](const Outcome& o) { return o.first; });
  double mi = 0.0;
  for (const auto& o : joint.outcomes()) {
    mi += o.p * std::log2(o.p / (px[o.second] * py[o.first]));
  }
  return {std::max(mi, 0.0)};
}

}  // namespace infoagree
