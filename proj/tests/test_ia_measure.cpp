#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "infoagree/error.hpp"
#include "infoagree/ia_measure.hpp"
#include "test_support.hpp"

using namespace infoagree;

namespace {

AgreementMatrix mat(std::vector<std::vector<Count>> rows) {
  return AgreementMatrix::from_rows(rows);
}

// Frozen from 40-digit mpmath evaluations of the defining formulas.
constexpr double kIa2112 = 0.081704165945510485;    // [[2,1],[1,2]], MI/H(X)
constexpr double kIa2101 = 0.38368854659634437;     // [[2,1],[0,1]]
constexpr double kHy2101 = 0.81127812445913286;     // H({3/4, 1/4})

// IA_eps from refined entropies in natural log, no branch logic shared with
// the library beyond the four-case formula itself.
double ia_natural_log(const AgreementMatrix& a) {
  const auto h = testing::reference_entropies(a, /*natural=*/true);
  const double n = static_cast<double>(a.size());
  if (count_non_null_cols(a) == 1) {
    return (n - static_cast<double>(count_non_null_rows(a))) / n;
  }
  if (count_non_null_rows(a) == 1) {
    return (n - static_cast<double>(count_non_null_cols(a))) / n;
  }
  const double lo = std::min(h.hx, h.hy);
  const double hi = std::max(h.hx, h.hy);
  return 1.0 + (hi - h.hxy) / lo;
}

}  // namespace

TEST_CASE("strict IA") {
  CHECK(ia_strict(mat({{1, 1}, {1, 1}})) == 0.0);
  CHECK(std::abs(ia_strict(mat({{2, 1}, {1, 2}})) - kIa2112) <= 1e-15);
  try {
    ia_strict(mat({{5, 0}, {0, 5}}));
    FAIL("zero accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContainsZero);
  }
}

TEST_CASE("IA_eps on the worked examples") {
  const auto diag = ia_epsilon(mat({{5, 0}, {0, 5}}));
  CHECK(diag.value == 1.0);
  CHECK(diag.ia_case == IaCase::RegularXMin);
  CHECK(diag.h_x.bits == 1.0);
  CHECK(diag.h_y.bits == 1.0);
  CHECK(diag.h_xy.bits == 1.0);

  const auto t1a = ia_epsilon(mat({{4, 0, 0}, {6, 0, 0}, {0, 0, 0}}));
  CHECK(t1a.value == 1.0 / 3.0);
  CHECK(t1a.ia_case == IaCase::DegenerateX);
  CHECK(t1a.n == 3);
  CHECK(t1a.m == 2);
  CHECK(t1a.l == 1);
  CHECK(t1a.h_x.bits == 0.0);

  const auto single = ia_epsilon(mat({{7, 0}, {0, 0}}));
  CHECK(single.value == 0.5);
  CHECK(single.ia_case == IaCase::DegenerateX);
  CHECK(single.m == 1);
  CHECK(single.l == 1);

  const auto reg = ia_epsilon(mat({{2, 1}, {0, 1}}));
  CHECK(reg.ia_case == IaCase::RegularYMin);
  CHECK(std::abs(reg.h_y.bits - kHy2101) <= 1e-15);
  CHECK(reg.h_x.bits == 1.0);
  CHECK(reg.h_xy.bits == 1.5);
  CHECK(std::abs(reg.value - kIa2101) <= 1e-15);

  CHECK(ia_epsilon(mat({{3, 0}, {0, 1}})).value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("degenerate rows mirror degenerate columns") {
  const auto r = ia_epsilon(mat({{0, 0, 0}, {2, 0, 5}, {0, 0, 0}}));
  CHECK(r.ia_case == IaCase::DegenerateY);
  CHECK(r.m == 1);
  CHECK(r.l == 2);
  CHECK(r.value == 1.0 / 3.0);
  CHECK(r.h_y.bits == 0.0);

  // All mass in one cell: (n-1)/n whichever branch fires.
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::vector<Count>> rows(n, std::vector<Count>(n, 0));
    rows[n - 1][n / 2] = 42;
    const auto one = ia_epsilon(AgreementMatrix::from_rows(rows));
    CHECK(one.value == static_cast<double>(n - 1) / static_cast<double>(n));
    CHECK(one.ia_case == IaCase::DegenerateX);
  }
  // A full single column scores 0.
  const auto full_col = ia_epsilon(mat({{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}));
  CHECK(full_col.value == 0.0);
}

TEST_CASE("ties keep the X-min label and value") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_matrix(rng, 2, 6, 0.3);
    auto rows = a.to_rows();
    for (std::size_t y = 0; y < rows.size(); ++y) {
      for (std::size_t x = 0; x < y; ++x) rows[y][x] = rows[x][y];
    }
    const auto sym = AgreementMatrix::from_rows(rows);
    const auto r = ia_epsilon(sym);
    if (r.m < 2 || r.l < 2) continue;
    CHECK(r.h_x.bits == r.h_y.bits);
    CHECK(r.ia_case == IaCase::RegularXMin);
    const double y_min = 1.0 + (r.h_x.bits - r.h_xy.bits) / r.h_y.bits;
    CHECK(std::abs(r.value - std::clamp(y_min, 0.0, 1.0)) <= 1e-12);
  }
}

TEST_CASE("IA_eps properties on random matrices") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = testing::random_matrix(rng, 2, 9, (trial % 4) * 0.25);
    const auto r = ia_epsilon(a);
    CAPTURE(trial);
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 1.0);
    CHECK(r.m == count_non_null_rows(a));
    CHECK(r.l == count_non_null_cols(a));
    CHECK((r.ia_case == IaCase::DegenerateX) == (r.l == 1));
    CHECK((r.ia_case == IaCase::DegenerateY) == (r.l != 1 && r.m == 1));

    // Base invariance: the same ratio with natural logs.
    CHECK(std::abs(r.value - ia_natural_log(a)) <= 1e-12);

    const auto rt = ia_epsilon(transpose(a));
    CHECK(std::abs(r.value - rt.value) <= 1e-12);
    CHECK(rt.m == r.l);
    CHECK(rt.l == r.m);

    if (a.strictly_positive()) {
      CHECK(std::abs(r.value - ia_strict(a)) <= 1e-12);
    }
  }
}
