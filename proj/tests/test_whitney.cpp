#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfloc/errors.hpp"
#include "tfloc/whitney.hpp"

using namespace tfloc;

TEST_SUITE("whitney") {

TEST_CASE("D = 8 pieces") {
  const auto w = whitney_decompose(8);
  REQUIRE(w.size() == 5);
  const double left[] = {-4, -3, -2, 2, 3};
  const double len[] = {1, 1, 4, 1, 1};
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(w[j].left == left[j]);
    CHECK(w[j].length == len[j]);
    CHECK(w.in_large(j));
  }
  CHECK(w[0].terminal);
  CHECK(w[4].terminal);
  CHECK_FALSE(w[2].terminal);
  CHECK(w.large_mass() == 8);
}

TEST_CASE("D = 2 is central piece plus two half-length terminals") {
  const auto w = whitney_decompose(2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].left == -1.0);
  CHECK(w[0].length == 0.5);
  CHECK(w[1].left == -0.5);
  CHECK(w[1].length == 1.0);
  CHECK(w[2].length == 0.5);
  CHECK(w.large_indices() == std::vector<std::size_t>{1});
}

TEST_CASE("D below 2 is a domain error") {
  CHECK_THROWS_AS(whitney_decompose(1.999), DomainError);
  CHECK_THROWS_AS(whitney_decompose(-4), DomainError);
  CHECK_THROWS_AS(whitney_decompose(std::nan("")), DomainError);
}

TEST_CASE("D = 1024 large subfamily") {
  const auto w = whitney_decompose(1024);
  CHECK(w.large_indices().size() <= 23);
  CHECK(w.large_mass() >= 1020);
}

TEST_CASE("from_pieces rejects gaps and overlaps") {
  CHECK_THROWS_AS(WhitneyDecomposition::from_pieces(4, {{-2, 1}, {-0.5, 2.5}}), DomainError);
  CHECK_THROWS_AS(WhitneyDecomposition::from_pieces(4, {{-2, 3}}), DomainError);
  CHECK_NOTHROW(WhitneyDecomposition::from_pieces(4, {{-2, 4}}));
}

TEST_CASE("admissible set arithmetic") {
  const auto w = whitney_decompose(8);
  // C log^{1+eps}(8) = 0.5: k < 3.5 on the central piece, k < 0.5 elsewhere.
  const double eps = 0.1;
  const double C = 0.5 / std::pow(std::log(8.0), 1.0 + eps);
  const auto s = admissible_set(w, C, eps);
  CHECK(s.threshold == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.size() == 8);
  int central = 0;
  for (const auto& e : s.entries) central += e.piece == 2;
  CHECK(central == 4);

  const auto big = admissible_set(w, 10.0, eps);
  CHECK(big.empty());
  CHECK(admissible_set_with_threshold(w, 4.0).empty());

  CHECK_THROWS_AS(admissible_set(w, 0.0, eps), DomainError);
  CHECK_THROWS_AS(admissible_set(w, 1.0, 0.0), DomainError);
}

TEST_CASE("threshold uses strict inequality") {
  const auto w = whitney_decompose(8);
  // k < 4 - 1 = 3 excludes k = 3 on the central piece.
  const auto s = admissible_set_with_threshold(w, 1.0);
  CHECK(s.size() == 3);
}

TEST_CASE("property: decomposition invariants over random D") {
  oracle::Draw draw(7);
  for (int trial = 0; trial < 300; ++trial) {
    const double D = std::exp2(draw.uniform(1.0, 20.0));
    const auto w = whitney_decompose(D);
    double sum = 0.0, cursor = -D / 2;
    for (const auto& p : w.pieces()) {
      CHECK(p.left == doctest::Approx(cursor).epsilon(1e-12));
      cursor = p.right();
      sum += p.length;
    }
    CHECK(sum == doctest::Approx(D).epsilon(1e-12));
    CHECK(w.comparable());
    CHECK(static_cast<double>(w.large_indices().size()) <= 2.0 * std::log2(D) + 3.0);
    CHECK(w.large_mass() >= D - 4.0);
    // Terminal length is what the tails leave over, in [1, 2) once D >= 16.
    if (D >= 16) {
      CHECK(w[0].length >= 1.0);
      CHECK(w[0].length < 2.0);
    }
    // Tail pieces meet the unrelaxed bound delta <= dist <= 4 delta; only the
    // central piece sits at dist = delta / 2.
    for (std::size_t j = 1; j + 1 < w.size(); ++j) {
      const double d = w.boundary_distance(j), len = w[j].length;
      if (j == w.size() / 2) {
        CHECK(d == doctest::Approx(len / 2));
      } else {
        CHECK(d >= len - 1e-12 * D);
        CHECK(d <= 4 * len);
      }
    }
  }
}

TEST_CASE("property: |S| matches a direct count") {
  oracle::Draw draw(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double D = std::exp2(draw.uniform(1.0, 16.0));
    const double C = draw.uniform(0.01, 3.0), eps = draw.uniform(0.01, 1.0);
    const auto w = whitney_decompose(D);
    const auto s = admissible_set(w, C, eps);
    const double tau = C * std::pow(std::log(D), 1.0 + eps);
    std::size_t expect = 0;
    for (const auto& p : w.pieces())
      if (p.length >= 1.0) expect += static_cast<std::size_t>(std::max(0.0, std::ceil(p.length - tau)));
    CHECK(s.size() == expect);
    for (const auto& e : s.entries) CHECK(static_cast<double>(e.k) < w[e.piece].length - tau);
  }
}

TEST_CASE("property: |S| is monotone in C, eps and D") {
  oracle::Draw draw(13);
  for (int trial = 0; trial < 100; ++trial) {
    const double D = std::exp2(draw.uniform(2.0, 14.0));
    const auto w = whitney_decompose(D);
    const double C = draw.uniform(0.05, 2.0), eps = draw.uniform(0.05, 0.5);
    const auto base = admissible_set(w, C, eps).size();
    CHECK(admissible_set(w, C * 1.5, eps).size() <= base);
    CHECK(admissible_set(w, C, eps * 1.5).size() <= base);
  }
  std::size_t prev = 0;
  for (int e = 4; e <= 20; ++e) {
    const auto s = admissible_set(whitney_decompose(std::exp2(e)), 1.0, 0.1).size();
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("deficit (D - |S|) / log^{2+eps}(D) stays bounded") {
  double lo = 1e300, hi = 0.0;
  for (int e = 1; e <= 20; ++e) {
    const double D = std::exp2(e);
    const auto s = admissible_set(whitney_decompose(D), 1.0, 0.1);
    const double c = s.deficit_constant();
    if (e >= 4) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    CHECK(c >= 0.0);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 10.0);
}

TEST_CASE("D = 1024 size bound with the reported constant") {
  const auto s = admissible_set(whitney_decompose(1024), 1.0, 0.1);
  const double Cp = s.deficit_constant();
  CHECK(static_cast<double>(s.size()) >= 1024 - Cp * std::pow(std::log(1024.0), 2.1) - 1e-9);
  CHECK(Cp < 10.0);
}

}
