#pragma once

#include <cstddef>

#include <Eigen/Core>

namespace tfloc {

/// Stretched-exponential envelope y <= A exp(-rate u^p).
struct EnvelopeFit {
  double A = 0.0;
  double rate = 0.0;
  double exponent = 0.0;  // p; fixed or fitted depending on the call
  double residual = 0.0;  // sum of squared log residuals over envelope points
  std::size_t points = 0;
};

struct DecayFitOptions {
  double floor = 1e-13;  // samples at or below this are treated as quadrature noise
  int bins = 24;         // log-spaced bins for the upper envelope
  double min_exponent = 0.05;
  double max_exponent = 1.5;
  double exponent_step = 0.0025;
};

/// Upper envelope of (u, y): the largest y in each log-spaced bin of u,
/// restricted to y > floor. Oscillating transforms have zeros, so the
/// regression runs on the envelope rather than on raw samples.
void decay_envelope(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                    const DecayFitOptions& opt, Eigen::ArrayXd& eu, Eigen::ArrayXd& ey);

/// Least squares fit of log y = log A - rate u^p with p held fixed.
EnvelopeFit fit_fixed_exponent(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                               double p, const DecayFitOptions& opt = {});

/// Same model with p chosen by scanning [min_exponent, max_exponent].
EnvelopeFit fit_free_exponent(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                              const DecayFitOptions& opt = {});

}  // namespace tfloc
