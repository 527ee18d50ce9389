#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "tfloc/errors.hpp"
#include "tfloc/schemes.hpp"

using namespace tfloc;

#ifndef TFLOC_DATA_DIR
#error "TFLOC_DATA_DIR must point at the bundled data directory"
#endif

namespace {

std::vector<double> bundled_zeros() { return load_zeros(std::string(TFLOC_DATA_DIR) + "/zeta_zeros_100.txt"); }

}  // namespace

TEST_SUITE("schemes") {

TEST_CASE("rv counting examples") {
  const auto s = rv_scheme(100, false);
  CHECK(counting_function(s.lambda, 2.0) == 9);
  CHECK(counting_function(s.lambda, 3.1) == 19);
  CHECK(counting_function(s.lambda, 0.5) == 1);
  const auto d = rv_scheme(100, true);
  CHECK(counting_function(d.lambda, 2.0) == 10);
  CHECK(counting_function(d.m, 2.0) == 10);
  CHECK(d.lambda.max_order() == 1);
}

TEST_CASE("multiset counting") {
  CHECK(counting_function(NodeSet{}, 5.0) == 0);
  const NodeSet two({{0.0, 0}, {0.0, 1}}, 1.0);
  CHECK(counting_function(two, 0.0) == 2);
}

TEST_CASE("property: rv count is 1 + 2[R^2] for 10^4 random R") {
  const auto s = rv_scheme(900, false);
  oracle::Draw draw(99);
  for (int i = 0; i < 10000; ++i) {
    const double R = draw.uniform(0.0, 30.0);
    const auto n = counting_function(s.lambda, R);
    if (n != oracle::rv_count(R) || n != oracle::brute_count(s.lambda.nodes(), R)) {
      FAIL("count mismatch at R = " << R);
    }
  }
  // Exactly at the jumps, where R * R may round below n.
  for (int n = 0; n <= 900; ++n) CHECK(counting_function(s.lambda, std::sqrt(double(n))) == std::size_t(1 + 2 * n));
}

TEST_CASE("property: counting is monotone and additive over unions") {
  oracle::Draw draw(4);
  std::vector<Node> a, b;
  for (int i = 0; i < 300; ++i) a.push_back({draw.uniform(-10, 10), draw.integer(0, 2)});
  for (int i = 0; i < 200; ++i) b.push_back({draw.uniform(-10, 10), 0});
  const NodeSet A(a, 10), B(b, 10);
  const NodeSet U = A.merged(B);
  std::size_t prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double R = i * 0.01;
    const auto n = counting_function(U, R);
    CHECK(n == counting_function(A, R) + counting_function(B, R));
    CHECK(n == oracle::brute_count(U.nodes(), R));
    CHECK(n >= prev);
    prev = n;
  }
}

TEST_CASE("rv growth exponent") {
  const auto s = rv_scheme(400, true);
  CHECK(s.growth_bound_holds(3.0));
  // 1 + 2[R^2] exceeds R^2, so the exponent 2 cannot hold.
  auto two = s;
  two.L = 2.0;
  CHECK_FALSE(two.growth_bound_holds(1.0));
}

TEST_CASE("zeta scheme nodes") {
  const std::vector<double> zeros{14.134725141734693, 21.022039638771555, 25.010857580145688};
  const int max_n = 1000;
  const auto s = zeta_scheme(zeros, max_n);
  const double W = std::log(double(max_n)) / (4 * std::numbers::pi);
  CHECK(counting_function(s.lambda, W) == 2 * max_n - 1);
  CHECK(zeta_count(zeros, 14.2) == 1);
  CHECK(zeta_count(zeros, 14.0) == 0);
  CHECK(counting_function(s.m, 14.2) == 2);
  const auto empty = zeta_scheme(std::vector<double>{}, 10);
  CHECK(empty.m.empty());
  CHECK(counting_function(empty.m, 1e9) == 0);
  CHECK_THROWS_AS(zeta_scheme(std::vector<double>{21.0, 14.0}, 10), InputError);
  CHECK_THROWS_AS(zeta_scheme(std::vector<double>{-1.0}, 10), InputError);
}

TEST_CASE("zeros file parsing") {
  std::istringstream ok("# header\n\n14.134725141734693\n  21.022039638771555  # second\n");
  const auto z = read_zeros(ok);
  REQUIRE(z.size() == 2);
  CHECK(z[1] == 21.022039638771555);

  std::istringstream bad("14.13\nabc\n");
  try {
    read_zeros(bad);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream unsorted("21\n14\n");
  CHECK_THROWS_AS(read_zeros(unsorted), InputError);
  try {
    load_zeros("/nonexistent/zeros.txt");
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("file not found") != std::string::npos);
  }
}

TEST_CASE("bundled table") {
  const auto z = bundled_zeros();
  REQUIRE(z.size() == 100);
  CHECK(z.front() == doctest::Approx(14.134725141734693).epsilon(1e-15));
  CHECK(z.back() == doctest::Approx(236.524229665816205).epsilon(1e-15));
  CHECK(zeta_count(z, 100.0) == 29);
  // Left-continuous: the ordinate itself is not yet counted.
  CHECK(zeta_count(z, z[5]) == 5);
  CHECK(zeta_count(z, std::nextafter(z[5], 1e9)) == 6);
}

TEST_CASE("audit examples") {
  const auto s = rv_scheme(100, false);
  const auto a = audit_bound(s, {2, 2}, {2, 2}, 0.5, 0.1);
  CHECK(a.slack(0, 0) == 2.0);
  const auto grid = audit_bound(s, {1, 10}, {1, 10}, 0.01, 0.1);
  CHECK(grid.R1.size() == 901);
  CHECK(grid.min_slack >= -4.0);
  CHECK(grid.slack(grid.R1.size() - 1, 0) == doctest::Approx(201 + 3 - 40.0));
  CHECK_THROWS_AS(audit_bound(s, {1, 11}, {1, 2}, 0.1, 0.1), ExtentError);
  CHECK_THROWS_AS(audit_bound(s, {0.5, 2}, {1, 2}, 0.1, 0.1), DomainError);
}

TEST_CASE("property: audit matches a brute-force recomputation") {
  const auto s = rv_scheme(50, true);
  const auto a = audit_bound(s, {1, 7}, {1.5, 7}, 0.05, 0.2);
  double fitted = 0.0, worst = 1e300;
  for (Eigen::Index i = 0; i < a.R1.size(); ++i)
    for (Eigen::Index j = 0; j < a.R2.size(); ++j) {
      const double v = double(oracle::brute_count(s.lambda.nodes(), a.R1[i]) + oracle::brute_count(s.m.nodes(), a.R2[j])) -
                       4 * a.R1[i] * a.R2[j];
      CHECK(a.slack(i, j) == v);
      worst = std::min(worst, v);
      if (v < 0) fitted = std::max(fitted, -v / std::pow(std::log(4 * a.R1[i] * a.R2[j]), 2.2));
    }
  CHECK(a.min_slack == worst);
  CHECK(a.fitted_C == doctest::Approx(fitted).epsilon(1e-14));
  CHECK(a.slack(static_cast<Eigen::Index>(std::lround((a.min_R1 - 1) / 0.05)),
                static_cast<Eigen::Index>(std::lround((a.min_R2 - 1.5) / 0.05))) == a.min_slack);
}

TEST_CASE("doubling every node adds n_Lambda + n_M to the slack") {
  const auto s = rv_scheme(64, false);
  auto d = s;
  d.lambda = s.lambda.merged(s.lambda);
  d.m = s.m.merged(s.m);
  const auto a = audit_bound(s, {1, 8}, {1, 8}, 0.25, 0.1);
  const auto b = audit_bound(d, {1, 8}, {1, 8}, 0.25, 0.1);
  for (Eigen::Index i = 0; i < a.R1.size(); ++i) {
    const double n = double(counting_function(s.lambda, a.R1[i]) + counting_function(s.m, a.R2[i]));
    CHECK(b.slack(i, i) - a.slack(i, i) == n);
  }
}

TEST_CASE("fitted C is nonincreasing in eps") {
  const auto s = rv_scheme(100, false);
  double prev = 1e300;
  for (double eps : {0.05, 0.1, 0.2, 0.5, 1.0}) {
    const double c = audit_bound(s, {1, 10}, {1, 10}, 0.05, eps).fitted_C;
    CHECK(c >= 0.0);
    CHECK(c <= prev);
    prev = c;
  }
}

TEST_CASE("Riemann-von Mangoldt lower bound") {
  const auto z = bundled_zeros();
  const auto full = riemann_von_mangoldt_check(z, 2.0, 236.0, 0.1, 10.0);
  CHECK(full.pass);
  const double main100 = 100 / (2 * std::numbers::pi) * std::log(100 / (2 * std::numbers::pi * std::numbers::e));
  CHECK(main100 == doctest::Approx(28.1).epsilon(1e-2));

  const auto below = riemann_von_mangoldt_check(z, 5.0, 14.0, 0.1, 1.0);
  CHECK(below.pass);
  CHECK(below.worst.count == 0);

  const auto strict = riemann_von_mangoldt_check(z, 2.0, 100.0, 0.1, 0.0);
  CHECK(strict.minimal_C >= 0.0);
  CHECK(riemann_von_mangoldt_check(z, 2.0, 100.0, 0.1, strict.minimal_C * (1 + 1e-12)).pass);
  if (strict.minimal_C > 0.0) CHECK_FALSE(strict.pass);

  CHECK_THROWS_AS(riemann_von_mangoldt_check(z, 2.0, 300.0, 0.1, 10.0), ExtentError);
  CHECK_THROWS_AS(riemann_von_mangoldt_check(z, 0.5, 30.0, 0.1, 10.0), DomainError);
}

TEST_CASE("property: N(T) jumps by one at each ordinate") {
  const auto z = bundled_zeros();
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(zeta_count(z, z[i]) == i);
    CHECK(zeta_count(z, z[i] + 1e-9) == i + 1);
  }
}

}
