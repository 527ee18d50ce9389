#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "tfloc/jet.hpp"
#include "tfloc/whitney.hpp"

namespace tfloc {

/// Smooth step v and rising cutoff r(t) = sin(pi/2 v(t)) on [-1, 1].
///
/// v' is the centered convolution of the normalized boxes
/// a_n^{-1} 1[-a_n/2, a_n/2] with a_n proportional to n^{-1/(1-eta)} and
/// sum a_n = 2, so its transform is the closed-form product prod sinc(pi a_n xi)
/// and decays like exp(-a |xi|^{1-eta}). Because supp v' = [-1, 1], v' equals its
/// Fourier series of period 2 there, and v, r and all their derivatives are
/// evaluated from that series.
///
/// r vanishes for t <= -1, equals 1 for t >= 1 and satisfies
/// r(t)^2 + r(-t)^2 = 1.
class RisingCutoff {
 public:
  static constexpr int kBoxes = 2000;

  explicit RisingCutoff(double eta);

  double eta() const { return eta_; }
  /// Box width exponent 1/(1-eta).
  double box_exponent() const { return 1.0 / (1.0 - eta_); }
  std::size_t series_terms() const { return coeff_.size(); }

  /// Closed-form transform of v', prod_n sinc(pi a_n xi).
  double bump_transform(double xi) const;

  double bump(double t) const;  // v'(t)
  double step(double t) const;  // v(t)
  double value(double t) const; // r(t)
  /// r'(t), the derivative of the rising cutoff.
  double derivative(double t) const { return jet(t).derivative(1); }

  Jet8 step_jet(double t) const;
  Jet8 jet(double t) const;

 private:
  Jet8 series(double t, int order) const;

  double eta_;
  Eigen::ArrayXd widths_;
  Eigen::ArrayXd coeff_;  // coeff_[m-1] = transform(m / 2), m >= 1
};

/// Bell attached to one piece. The atom interval is [left, right]; the bell
/// ramps over [left - eps_left, left + eps_left] and
/// [right - eps_right, right + eps_right] and equals 1 in between.
struct BellWindow {
  std::size_t piece = 0;
  double left = 0.0;
  double right = 0.0;
  double eps_left = 0.0;
  double eps_right = 0.0;
  std::shared_ptr<const RisingCutoff> cutoff;

  double length() const { return right - left; }
  double support_left() const { return left - eps_left; }
  double support_right() const { return right + eps_right; }
  double core_left() const { return left + eps_left; }
  double core_right() const { return right - eps_right; }
};

/// One bell per piece. Interior junctions use radius min(delta_l, delta_r)/4.
/// At +-D/2 the terminal bell ramps from 0 to 1 inside [-D/2, -D/2 + delta/4]
/// (resp. the mirror), i.e. its atom interval starts delta/8 inside I with
/// radius delta/8, so every bell is supported in [-D/2, D/2].
std::vector<BellWindow> build_bells(const WhitneyDecomposition& w, double eta);

double bell_value(const BellWindow& b, double x);
Jet8 bell_jet(const BellWindow& b, double x);

/// Sum of squared bell values at x.
double energy(const std::vector<BellWindow>& bells, double x);

}  // namespace tfloc
