#pragma once

#include <complex>
#include <functional>

#include <Eigen/Core>

namespace tfloc {

enum class Symmetry { none, even, odd };

/// Compactly supported function sampled on a uniform grid over [left, right],
/// endpoints included. Samples at both endpoints must vanish.
class SampledFunction {
 public:
  SampledFunction(double left, double right, Eigen::VectorXcd samples, Symmetry symmetry = Symmetry::none);

  /// Samples f at intervals + 1 equispaced points.
  static SampledFunction sample(const std::function<std::complex<double>(double)>& f, double left, double right,
                                Eigen::Index intervals, Symmetry symmetry = Symmetry::none);
  static SampledFunction sample_real(const std::function<double(double)>& f, double left, double right,
                                     Eigen::Index intervals, Symmetry symmetry = Symmetry::none);

  double left() const { return left_; }
  double right() const { return right_; }
  double step() const { return step_; }
  Eigen::Index size() const { return samples_.size(); }
  const Eigen::VectorXcd& samples() const { return samples_; }
  Symmetry symmetry() const { return symmetry_; }
  double x(Eigen::Index i) const { return left_ + static_cast<double>(i) * step_; }
  Eigen::VectorXd grid() const;

  /// Same samples on [s * left, s * right]: the function x -> f(x / s).
  SampledFunction dilated(double s) const;

  SampledFunction& operator+=(const SampledFunction& o);
  SampledFunction& operator*=(std::complex<double> s);

 private:
  double left_, right_, step_;
  Eigen::VectorXcd samples_;
  Symmetry symmetry_;
};

/// Default resolution: support length / 2^16.
inline constexpr Eigen::Index kDefaultIntervals = Eigen::Index(1) << 16;

/// Highest transform derivative order ft_at accepts.
inline constexpr int kMaxTransformOrder = 8;

/// m-th derivative of Ff(xi) = int f(x) exp(-2 pi i x xi) dx, computed as the
/// trapezoid sum of (-2 pi i x)^m f(x) exp(-2 pi i x xi).
/// Throws UnsupportedOrder for m > 8.
std::complex<double> ft_at(const SampledFunction& f, double xi, int m = 0);

Eigen::VectorXcd ft_sweep(const SampledFunction& f, const Eigen::Ref<const Eigen::VectorXd>& xi, int m = 0);

struct SupPoint {
  double x = 0.0;
  double value = 0.0;
};

/// Grid argmax of |f| refined by a parabola through the three nearest samples.
SupPoint sup_norm(const SampledFunction& f);

double l2_norm(const SampledFunction& f);

/// Trapezoid inner product <f, g> = int f conj(g); both on the same grid.
std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g);

}  // namespace tfloc
