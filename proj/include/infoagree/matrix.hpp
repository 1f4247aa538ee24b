#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace infoagree {

using Count = std::uint64_t;

/// Square matrix of co-classification counts between two raters.
///
/// Orientation is fixed: `at(y, x)` is the number of items that rater Y put
/// in class y and rater X put in class x. Rows belong to rater Y, columns to
/// rater X. Instances are immutable once constructed and always satisfy:
/// n >= 2, every row has n cells, and the cached total is positive and equal
/// to the sum of all cells.
class AgreementMatrix {
 public:
  /// Throws Error with kind NotSquare, DimensionTooSmall, AllZero or Overflow.
  static AgreementMatrix from_rows(const std::vector<std::vector<Count>>& rows);

  /// Same as from_rows, but accepts signed input and reports NegativeCell.
  static AgreementMatrix from_signed_rows(
      const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  Count total() const noexcept { return total_; }

  Count at(std::size_t y, std::size_t x) const { return cells_[y * n_ + x]; }
  std::span<const Count> row(std::size_t y) const {
    return {cells_.data() + y * n_, n_};
  }
  /// Row-major view of all n*n cells.
  std::span<const Count> cells() const noexcept { return cells_; }

  bool strictly_positive() const noexcept;
  std::vector<std::vector<Count>> to_rows() const;

  AgreementMatrix transposed() const;

  friend bool operator==(const AgreementMatrix&,
                         const AgreementMatrix&) = default;

 private:
  AgreementMatrix(std::size_t n, std::vector<Count> cells, Count total)
      : n_(n), cells_(std::move(cells)), total_(total) {}

  std::size_t n_;
  std::vector<Count> cells_;
  Count total_;
};

std::vector<Count> row_sums(const AgreementMatrix& a);
std::vector<Count> col_sums(const AgreementMatrix& a);
AgreementMatrix transpose(const AgreementMatrix& a);

std::size_t count_non_null_rows(const AgreementMatrix& a);
std::size_t count_non_null_cols(const AgreementMatrix& a);

}  // namespace infoagree
