#include "tfloc/windows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "tfloc/errors.hpp"

namespace tfloc {
namespace {

using std::numbers::pi;

constexpr double kSeriesTolerance = 1e-18;
constexpr int kMaxSeriesTerms = 1 << 16;
constexpr int kReseed = 64;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

RisingCutoff::RisingCutoff(double eta) : eta_(eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  widths_ = Eigen::ArrayXd::LinSpaced(kBoxes, 1.0, kBoxes).pow(-box_exponent());
  widths_ *= 2.0 / widths_.sum();

  // v'(t) = 1/2 + sum_{m >= 1} F(m/2) cos(pi m t) on [-1, 1]. Keep terms until the
  // eighth-derivative weight (pi m)^8 |F(m/2)| has dropped below tolerance.
  std::vector<double> c;
  int last = 0;
  for (int m = 1; m <= kMaxSeriesTerms; ++m) {
    const double f = bump_transform(0.5 * m);
    c.push_back(f);
    const double weight = std::abs(f) * std::pow(pi * m, kMaxDerivativeOrder);
    if (weight >= kSeriesTolerance) last = m;
    if (m - last > 256) break;
  }
  c.resize(std::max(last, 1));
  coeff_ = Eigen::Map<Eigen::ArrayXd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

double RisingCutoff::bump_transform(double xi) const {
  double p = 1.0;
  for (Eigen::Index n = 0; n < widths_.size(); ++n) {
    p *= sinc(pi * widths_[n] * xi);
    if (p == 0.0) break;
  }
  return p;
}

Jet8 RisingCutoff::series(double t, int order) const {
  Jet8 v;
  if (t <= -1.0) return v;
  if (t >= 1.0) return Jet8::constant(1.0);

  // Derivative k of cos(pi m t) is (pi m)^k times cos, -sin, -cos, sin cycling.
  std::array<double, kMaxDerivativeOrder> d{};  // d[k]: series part of v^{(k+1)}(t)
  double value = 0.0;
  const std::complex<double> step(std::cos(pi * t), std::sin(pi * t));
  std::complex<double> z = step;
  for (Eigen::Index i = 0; i < coeff_.size(); ++i) {
    const double m = static_cast<double>(i + 1);
    if ((i + 1) % kReseed == 0) z = {std::cos(pi * m * t), std::sin(pi * m * t)};
    const double c = z.real(), s = z.imag(), f = coeff_[i];
    value += f * s / (pi * m);
    double w = f;
    for (int k = 0; k < order; ++k) {
      switch (k % 4) {
        case 0: d[k] += w * c; break;
        case 1: d[k] -= w * s; break;
        case 2: d[k] -= w * c; break;
        default: d[k] += w * s; break;
      }
      w *= pi * m;
    }
    z *= step;
  }
  v[0] = std::clamp(0.5 * (t + 1.0) + value, 0.0, 1.0);
  double factorial = 1.0;
  for (int k = 0; k < order; ++k) {
    factorial *= static_cast<double>(k + 1);
    v[k + 1] = (d[k] + (k == 0 ? 0.5 : 0.0)) / factorial;
  }
  return v;
}

Jet8 RisingCutoff::step_jet(double t) const { return series(t, kMaxDerivativeOrder); }

double RisingCutoff::bump(double t) const { return series(t, 1)[1]; }

double RisingCutoff::step(double t) const { return series(t, 0)[0]; }

double RisingCutoff::value(double t) const {
  if (t <= -1.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return std::sin(0.5 * pi * step(t));
}

Jet8 RisingCutoff::jet(double t) const {
  if (t <= -1.0) return Jet8();
  if (t >= 1.0) return Jet8::constant(1.0);
  return sin(step_jet(t) * (0.5 * pi));
}

std::vector<BellWindow> build_bells(const WhitneyDecomposition& w, double eta) {
  auto cutoff = std::make_shared<const RisingCutoff>(eta);
  const auto& pieces = w.pieces();
  const std::size_t n = pieces.size();
  std::vector<BellWindow> bells(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto& b = bells[j];
    const auto& p = pieces[j];
    b.piece = j;
    b.cutoff = cutoff;
    b.left = p.left;
    b.right = p.right();
    if (j == 0) {
      b.eps_left = p.length / 8;
      b.left += b.eps_left;
    } else {
      b.eps_left = std::min(p.length, pieces[j - 1].length) / 4;
    }
    if (j + 1 == n) {
      b.eps_right = p.length / 8;
      b.right -= b.eps_right;
    } else {
      b.eps_right = std::min(p.length, pieces[j + 1].length) / 4;
    }
    if (b.eps_left + b.eps_right > b.length() * (1 + 1e-12))
      throw DomainError("bell ramps overlap; neighbouring pieces are too unequal");
  }
  return bells;
}

double bell_value(const BellWindow& b, double x) {
  if (x <= b.support_left() || x >= b.support_right()) return 0.0;
  if (x >= b.core_left() && x <= b.core_right()) return 1.0;
  return b.cutoff->value((x - b.left) / b.eps_left) * b.cutoff->value((b.right - x) / b.eps_right);
}

Jet8 bell_jet(const BellWindow& b, double x) {
  if (x <= b.support_left() || x >= b.support_right()) return Jet8();
  if (x >= b.core_left() && x <= b.core_right()) return Jet8::constant(1.0);
  const Jet8 rise = b.cutoff->jet((x - b.left) / b.eps_left).affine_pullback(1.0 / b.eps_left);
  const Jet8 fall = b.cutoff->jet((b.right - x) / b.eps_right).affine_pullback(-1.0 / b.eps_right);
  return rise * fall;
}

double energy(const std::vector<BellWindow>& bells, double x) {
  double s = 0.0;
  for (const auto& b : bells) {
    const double v = bell_value(b, x);
    s += v * v;
  }
  return s;
}

}  // namespace tfloc
