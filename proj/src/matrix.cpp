#include "infoagree/matrix.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "infoagree/error.hpp"

namespace infoagree {

namespace {

std::size_t count_positive(const std::vector<Count>& sums) {
  return static_cast<std::size_t>(
      std::count_if(sums.begin(), sums.end(), [](Count s) { return s > 0; }));
}

}  // namespace

AgreementMatrix AgreementMatrix::from_rows(
    const std::vector<std::vector<Count>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t y = 0; y < n; ++y) {
    if (rows[y].size() != n) {
      throw Error(ErrorKind::NotSquare,
                  "row " + std::to_string(y + 1) + " has " +
                      std::to_string(rows[y].size()) + " entries, expected " +
                      std::to_string(n));
    }
  }
  if (n < 2) {
    throw Error(ErrorKind::DimensionTooSmall,
                "agreement matrix needs at least 2 classes, got " +
                    std::to_string(n));
  }

  std::vector<Count> cells;
  cells.reserve(n * n);
  Count total = 0;
  for (const auto& r : rows) {
    for (Count c : r) {
      if (c > std::numeric_limits<Count>::max() - total) {
        throw Error(ErrorKind::Overflow, "sum of cells exceeds 2^64 - 1");
      }
      total += c;
      cells.push_back(c);
    }
  }
  if (total == 0) {
    throw Error(ErrorKind::AllZero, "agreement matrix has no positive cell");
  }
  return AgreementMatrix(n, std::move(cells), total);
}

AgreementMatrix AgreementMatrix::from_signed_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Count>> unsigned_rows;
  unsigned_rows.reserve(rows.size());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    auto& out = unsigned_rows.emplace_back();
    out.reserve(rows[y].size());
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      if (rows[y][x] < 0) {
        throw Error(ErrorKind::NegativeCell,
                    "negative count at row " + std::to_string(y + 1) +
                        ", column " + std::to_string(x + 1));
      }
      out.push_back(static_cast<Count>(rows[y][x]));
    }
  }
  return from_rows(unsigned_rows);
}

bool AgreementMatrix::strictly_positive() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](Count c) { return c > 0; });
}

std::vector<std::vector<Count>> AgreementMatrix::to_rows() const {
  std::vector<std::vector<Count>> rows;
  rows.reserve(n_);
  for (std::size_t y = 0; y < n_; ++y) {
    auto r = row(y);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

AgreementMatrix AgreementMatrix::transposed() const {
  std::vector<Count> cells(n_ * n_);
  for (std::size_t y = 0; y < n_; ++y) {
    for (std::size_t x = 0; x < n_; ++x) {
      cells[x * n_ + y] = cells_[y * n_ + x];
    }
  }
  return AgreementMatrix(n_, std::move(cells), total_);
}

// Partial sums never exceed the validated total, so no overflow checks here.
std::vector<Count> row_sums(const AgreementMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Count> sums(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    for (Count c : a.row(y)) sums[y] += c;
  }
  return sums;
}

std::vector<Count> col_sums(const AgreementMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Count> sums(n, 0);
  for (std::size_t y = 0; y < n; ++y) {
    auto r = a.row(y);
    for (std::size_t x = 0; x < n; ++x) sums[x] += r[x];
  }
  return sums;
}

AgreementMatrix transpose(const AgreementMatrix& a) { return a.transposed(); }

std::size_t count_non_null_rows(const AgreementMatrix& a) {
  return count_positive(row_sums(a));
}

std::size_t count_non_null_cols(const AgreementMatrix& a) {
  return count_positive(col_sums(a));
}

}  // namespace infoagree
