#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tfloc/errors.hpp"
#include "tfloc/fit.hpp"
#include "tfloc/fourier.hpp"
#include "tfloc/windows.hpp"

using namespace tfloc;

TEST_SUITE("windows") {

TEST_CASE("cutoff endpoints and symmetry") {
  const RisingCutoff r(0.5);
  CHECK(r.value(-1.0) == 0.0);
  CHECK(r.value(-3.0) == 0.0);
  CHECK(r.value(1.0) == 1.0);
  CHECK(r.value(0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(r.step(-1.0 + 1e-300) == doctest::Approx(0.0));
  CHECK_THROWS_AS(RisingCutoff(0.0), DomainError);
  CHECK_THROWS_AS(RisingCutoff(1.0), DomainError);
}

TEST_CASE("property: r(t)^2 + r(-t)^2 = 1 and r is monotone") {
  for (double eta : {0.1, 0.3, 0.5, 0.8}) {
    const RisingCutoff r(eta);
    oracle::Draw draw(17);
    for (int i = 0; i < 400; ++i) {
      const double t = draw.uniform(-1.2, 1.2);
      const double a = r.value(t), b = r.value(-t);
      CHECK(a * a + b * b == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(a >= 0.0);
      CHECK(a <= 1.0);
    }
    double prev = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double v = r.value(-1.0 + i / 1000.0);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("closed-form bump transform matches the box product and quadrature") {
  const double eta = 0.3;
  const RisingCutoff r(eta);
  for (double xi : {0.0, 0.25, 1.0, 3.5, 10.0}) {
    CHECK(r.bump_transform(xi) == doctest::Approx(oracle::box_product(eta, RisingCutoff::kBoxes, xi)).epsilon(1e-12));
    // The series for v' reproduces the same transform when integrated.
    const auto q = oracle::simpson_ft([&](double t) { return r.bump(t); }, -1.0, 1.0, xi, 0, 1 << 13);
    CHECK(std::abs(q - r.bump_transform(xi)) < 1e-9);
  }
  CHECK(oracle::simpson([&](double t) { return r.bump(t); }, -1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("cutoff jets agree with finite differences") {
  const RisingCutoff r(0.5);
  for (double t : {-0.7, -0.2, 0.0, 0.4, 0.85}) {
    const auto j = r.jet(t);
    CHECK(j.value() == doctest::Approx(r.value(t)).epsilon(1e-14));
    const auto f = [&](double s) { return r.value(s); };
    CHECK(j.derivative(1) == doctest::Approx(oracle::five_point(f, t, 1e-3, 1)).epsilon(1e-6));
    CHECK(j.derivative(2) == doctest::Approx(oracle::five_point(f, t, 1e-3, 2)).epsilon(1e-5));
    const auto g = [&](double s) { return r.jet(s).derivative(2); };
    CHECK(j.derivative(3) == doctest::Approx(oracle::five_point(g, t, 1e-3, 1)).epsilon(1e-5));
  }
}

TEST_CASE("single-piece bell") {
  const auto w = WhitneyDecomposition::from_pieces(4, {{-2, 4}});
  const auto bells = build_bells(w, 0.5);
  REQUIRE(bells.size() == 1);
  const auto& b = bells[0];
  CHECK(bell_value(b, -2.0) == 0.0);
  CHECK(bell_value(b, 2.0) == 0.0);
  CHECK(b.support_left() >= -2.0);
  CHECK(b.support_right() <= 2.0);
  CHECK(bell_value(b, 0.0) == 1.0);
  CHECK(bell_value(b, -2.0 + 4.0 / 4) == 1.0);
  CHECK(energy(bells, 1.0) == 1.0);
}

TEST_CASE("D = 8 junction partition of energy") {
  const auto bells = build_bells(whitney_decompose(8), 0.5);
  const double center = bell_value(bells[2], 2.0), right = bell_value(bells[3], 2.0);
  CHECK(center * center + right * right == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(center == doctest::Approx(right).epsilon(1e-12));
  for (const auto& b : bells) {
    CHECK(bell_value(b, b.support_left() - 0.1) == 0.0);
    CHECK(bell_value(b, 0.5 * (b.core_left() + b.core_right())) == 1.0);
    CHECK(b.support_left() >= -4.0);
    CHECK(b.support_right() <= 4.0);
  }
}

TEST_CASE("property: partition of energy on a dense interior grid") {
  for (double D : {8.0, 37.5, 256.0}) {
    for (double eta : {0.3, 0.5}) {
      const auto bells = build_bells(whitney_decompose(D), eta);
      const double lo = bells.front().core_left(), hi = bells.back().core_right();
      double worst = 0.0;
      for (int i = 0; i <= 20000; ++i) worst = std::max(worst, std::abs(energy(bells, lo + (hi - lo) * i / 20000.0) - 1.0));
      CHECK(worst < 1e-9);
      // Only adjacent bells overlap.
      for (std::size_t j = 0; j + 2 < bells.size(); ++j) CHECK(bells[j].support_right() <= bells[j + 2].support_left());
    }
  }
}

TEST_CASE("bell derivatives are continuous at ramp ends") {
  const auto bells = build_bells(whitney_decompose(16), 0.5);
  for (const auto& b : bells) {
    for (double x0 : {b.support_left(), b.core_left(), b.core_right(), b.support_right()}) {
      const auto in = bell_jet(b, x0 + 1e-7);
      const auto out = bell_jet(b, x0 - 1e-7);
      for (int n = 1; n <= 6; ++n) {
        const double scale = std::pow(1.0 / std::min(b.eps_left, b.eps_right), n);
        CHECK(std::abs(in.derivative(n) - out.derivative(n)) < 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("bell jet matches finite differences of the bell") {
  const auto bells = build_bells(whitney_decompose(32), 0.3);
  oracle::Draw draw(3);
  for (const auto& b : bells) {
    for (int i = 0; i < 10; ++i) {
      const double x = draw.uniform(b.support_left(), b.support_right());
      const double h = 1e-3 * std::min(b.eps_left, b.eps_right);
      const auto f = [&](double s) { return bell_value(b, s); };
      CHECK(bell_jet(b, x).value() == doctest::Approx(bell_value(b, x)).epsilon(1e-13));
      CHECK(std::abs(bell_jet(b, x).derivative(1) - oracle::five_point(f, x, h, 1)) < 1e-6 / b.eps_left);
    }
  }
}

TEST_CASE("rising cutoff derivative decays like exp(-a xi^{1-eta})") {
  const double eta = 0.5;
  const RisingCutoff r(eta);
  Eigen::VectorXd xi(400);
  for (int i = 0; i < 400; ++i) xi[i] = 10.0 * std::pow(100.0, i / 399.0);
  Eigen::ArrayXd y(400);
  double rate[2];
  for (int level = 0; level < 2; ++level) {
    const auto f = SampledFunction::sample_real([&](double t) { return r.derivative(t); }, -1.0, 1.0,
                                                Eigen::Index(1) << (14 + level));
    for (int i = 0; i < 400; ++i) y[i] = std::abs(ft_at(f, xi[i]));
    rate[level] = fit_fixed_exponent(xi.array(), y, 1.0 - eta).rate;
    CHECK(rate[level] > 0.0);
  }
  CHECK(rate[1] == doctest::Approx(rate[0]).epsilon(0.05));
}

}
