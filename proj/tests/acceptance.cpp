// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Criterion 10 goes through the command layer here; the
// cli_* ctest entries repeat it against the iagree executable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <random>
#include <string>
#include <vector>

#include "infoagree/commands.hpp"
#include "infoagree/epsilon_oracle.hpp"
#include "infoagree/ia_measure.hpp"
#include "infoagree/info_theory.hpp"
#include "test_support.hpp"

using namespace infoagree;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// 1. Single non-null column: exactly (n - m) / n, 200 cases, < 1 s.
Verdict single_column_exactness() {
  Verdict o;
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform(rng, 2, 10);
    const std::size_t m = uniform(rng, 1, n);
    const std::size_t col = uniform(rng, 0, n - 1);
    const auto a = testing::random_single_column(rng, n, m, col, 1000);
    const double expected =
        static_cast<double>(n - m) / static_cast<double>(n);
    const auto r = ia_epsilon(a);
    if (r.value != expected) {
      o.fail(fmt("value %.17g != %.17g", r.value, expected));
    }
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.fail(fmt("took %.3f s", t));
  if (o.ok) o.detail = fmt("200 matrices, %.4f s", t);
  return o;
}

// 2. Regular matrices with zeros vs the eps-oracle at 1e-9, tol 1e-6, < 5 s.
Verdict closed_form_vs_oracle() {
  Verdict o;
  std::mt19937_64 rng(2002);
  const auto t0 = Clock::now();
  double worst = 0.0;
  int done = 0;
  while (done < 200) {
    const auto a = testing::random_matrix(rng, 2, 8, 0.45);
    if (a.strictly_positive() || count_non_null_rows(a) < 2 ||
        count_non_null_cols(a) < 2) {
      continue;
    }
    ++done;
    const double closed = ia_epsilon(a).value;
    const double numeric = eval_ia_at(zero_freed(a, 1e-9)).ia_value;
    worst = std::max(worst, std::abs(closed - numeric));
  }
  const double t = seconds_since(t0);
  if (worst > 1e-6) o.fail(fmt("worst gap %.3g", worst));
  if (t >= 5.0) o.fail(fmt("took %.3f s", t));
  if (o.ok) o.detail = fmt("worst gap %.3g, %.4f s", worst, t);
  return o;
}

// 3. Table-1a matrices: shrinking tail and final gap <= 0.10 at 1e-12, < 10 s.
Verdict degenerate_convergence() {
  Verdict o;
  std::mt19937_64 rng(3003);
  const auto grid =
      geometric_grid(kDefaultEpsFrom, kDefaultEpsTo, kDefaultEpsSteps);
  const ConvergenceConfig config{kDegenerateFinalTol, true};
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = uniform(rng, 2, 10);
    const std::size_t m = uniform(rng, 1, n);
    const auto a = testing::single_column_table(rng, n, m, 1000);
    const double target = static_cast<double>(n - m) / static_cast<double>(n);
    const auto rep = check_convergence(sweep(a, grid), target, config);
    worst = std::max(worst, rep.gaps.back());
    if (!rep.tail_shrinking) o.fail(fmt("tail not shrinking (n=%g, m=%g)",
                                        static_cast<double>(n),
                                        static_cast<double>(m)));
    if (!rep.within_final_tol) o.fail(fmt("final gap %.4f", rep.gaps.back()));
  }
  const double t = seconds_since(t0);
  if (t >= 10.0) o.fail(fmt("took %.3f s", t));
  if (o.ok) o.detail = fmt("worst final gap %.4f, %.4f s", worst, t);
  return o;
}

// 4. Strictly positive: IA_eps == IA within 1e-12, both in [0, 1].
Verdict strict_consistency() {
  Verdict o;
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_positive_matrix(rng, 2, 10, 1000);
    const double e = ia_epsilon(a).value;
    const double s = ia_strict(a);
    worst = std::max(worst, std::abs(e - s));
    if (e < 0.0 || e > 1.0 || s < 0.0 || s > 1.0) o.fail("value outside [0,1]");
  }
  if (worst > 1e-12) o.fail(fmt("worst difference %.3g", worst));
  if (o.ok) o.detail = fmt("worst difference %.3g", worst);
  return o;
}

// 5. MI double sum equals H(X) + H(Y) - H(XY) within 1e-9; MI >= -1e-12.
Verdict mi_identity() {
  Verdict o;
  std::mt19937_64 rng(5005);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_positive_matrix(rng, 2, 10, 1000);
    const auto px = refine(marginal_x(a));
    const auto py = refine(marginal_y(a));
    const auto pxy = refine(joint(a));
    const double mi = mutual_information(pxy, px, py).bits;
    const double via_h = shannon_entropy(px).bits + shannon_entropy(py).bits -
                         shannon_entropy(pxy).bits;
    worst = std::max(worst, std::abs(mi - via_h));
    if (mi < -1e-12) o.fail(fmt("negative MI %.3g", mi));
  }
  if (worst > 1e-9) o.fail(fmt("worst difference %.3g", worst));
  if (o.ok) o.detail = fmt("worst difference %.3g", worst);
  return o;
}

// 6. Transpose symmetry with m and l swapped.
Verdict transpose_symmetry() {
  Verdict o;
  std::mt19937_64 rng(6006);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_matrix(rng, 2, 10, (i % 5) * 0.2, 1000);
    const auto r = ia_epsilon(a);
    const auto rt = ia_epsilon(transpose(a));
    worst = std::max(worst, std::abs(r.value - rt.value));
    if (r.m != rt.l || r.l != rt.m) o.fail("m and l not swapped");
  }
  if (worst > 1e-12) o.fail(fmt("worst difference %.3g", worst));
  if (o.ok) o.detail = fmt("worst difference %.3g", worst);
  return o;
}

// 7. Row/column permutations and scalings by 2, 10, 1000.
Verdict permutation_scale_invariance() {
  Verdict o;
  std::mt19937_64 rng(7007);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_matrix(rng, 2, 10, (i % 4) * 0.25, 1000);
    const double base = ia_epsilon(a).value;
    const auto p = testing::permuted(a, testing::random_permutation(rng, a.size()),
                                     testing::random_permutation(rng, a.size()));
    worst = std::max(worst, std::abs(ia_epsilon(p).value - base));
    for (Count k : {2, 10, 1000}) {
      worst = std::max(worst,
                       std::abs(ia_epsilon(testing::scaled(a, k)).value - base));
    }
  }
  if (worst > 1e-12) o.fail(fmt("worst difference %.3g", worst));
  if (o.ok) o.detail = fmt("worst difference %.3g", worst);
  return o;
}

// 8. Positivity for support >= 2 and count formula == definition.
Verdict entropy_positivity_and_counts() {
  Verdict o;
  std::mt19937_64 rng(8008);
  std::uniform_real_distribution<double> weight(1e-6, 1e6);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> w(uniform(rng, 1, 64));
    for (auto& v : w) v = weight(rng);
    double c = 0.0;
    for (double v : w) c += v;
    std::vector<infoagree::Outcome> outs;
    for (std::size_t k = 0; k < w.size(); ++k) outs.push_back({k, 0, w[k] / c});
    const double by_def =
        shannon_entropy(RefinedDistribution::from_outcomes(outs)).bits;
    const double by_counts = entropy_from_counts(w, c).bits;
    worst = std::max(worst, std::abs(by_def - by_counts));
    if (w.size() >= 2 && !(by_def > 0.0 && by_counts > 0.0)) {
      o.fail("zero entropy for support >= 2");
    }
    if (w.size() == 1 && (by_def != 0.0 || by_counts != 0.0)) {
      o.fail("nonzero entropy for a point mass");
    }
  }
  if (worst > 1e-12) o.fail(fmt("worst difference %.3g", worst));
  if (o.ok) o.detail = fmt("worst difference %.3g", worst);
  return o;
}

// 9. Quadratic cost: median time ratio n=1600 / n=400 in [4, 50], < 1 s.
Verdict quadratic_cost() {
  Verdict o;
  std::mt19937_64 rng(9009);
  auto median_time = [&](std::size_t n) {
    const auto a = AgreementMatrix::from_rows(
        testing::random_rows(rng, n, 1, 1000, 0.3));
    std::vector<double> times;
    double sink = 0.0;
    for (int rep = 0; rep < 7; ++rep) {
      const auto t0 = Clock::now();
      sink += ia_epsilon(a).value;
      times.push_back(seconds_since(t0));
    }
    if (!(sink >= 0.0)) o.fail("invalid value");
    std::nth_element(times.begin(), times.begin() + 3, times.end());
    return times[3];
  };
  median_time(400);  // warm-up
  const double small = median_time(400);
  const double large = median_time(1600);
  const double ratio = large / small;
  if (ratio < 4.0 || ratio > 50.0) o.fail(fmt("ratio %.2f", ratio));
  if (large >= 1.0) o.fail(fmt("n=1600 took %.3f s", large));
  if (o.ok) {
    o.detail = fmt("ratio %.2f, n=1600 median %.4f s", ratio, large);
  }
  return o;
}

// 10. compute on the worked examples reproduces the golden reports exactly,
// on repeated runs.
Verdict cli_golden_files() {
  Verdict o;
  namespace fs = std::filesystem;
  const fs::path data = INFOAGREE_TEST_DATA_DIR;
  const fs::path golden = INFOAGREE_TEST_GOLDEN_DIR;
  const fs::path previous = fs::current_path();
  fs::current_path(data);
  struct Case {
    const char* input;
    bool plain;
    const char* expected;
  };
  const Case cases[] = {{"single_column.csv", false, "single_column.json"},
                        {"uniform.csv", true, "uniform_plain.txt"},
                        {"diagonal.json", false, "diagonal.json"}};
  for (const auto& c : cases) {
    std::ifstream in(golden / c.expected, std::ios::binary);
    const std::string expected((std::istreambuf_iterator<char>(in)), {});
    CommonOptions options;
    options.plain = c.plain;
    for (int run = 0; run < 3; ++run) {
      std::ostringstream out, err;
      const int code = cmd_compute(c.input, options, out, err);
      if (code != kExitOk) o.fail(std::string(c.input) + ": " + err.str());
      if (out.str() != expected) {
        o.fail(std::string(c.input) + " differs from " + c.expected);
      }
    }
  }
  fs::current_path(previous);
  if (o.ok) o.detail = "3 matrices x 3 runs byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 single-column limit is exactly (n-m)/n", single_column_exactness},
      {"2 closed form matches eps-oracle at 1e-9", closed_form_vs_oracle},
      {"3 single-column eps-sweep converges", degenerate_convergence},
      {"4 IA_eps equals strict IA on positive matrices", strict_consistency},
      {"5 MI double sum equals entropy identity", mi_identity},
      {"6 transpose symmetry", transpose_symmetry},
      {"7 permutation and scale invariance", permutation_scale_invariance},
      {"8 entropy positivity and count formula", entropy_positivity_and_counts},
      {"9 quadratic running time", quadratic_cost},
      {"10 CLI golden reports", cli_golden_files},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s (%s)\n", o.ok ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
