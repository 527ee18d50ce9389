#include "tfloc/fit.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "tfloc/errors.hpp"

namespace tfloc {
namespace {

EnvelopeFit regress(const Eigen::ArrayXd& eu, const Eigen::ArrayXd& ly, double p) {
  Eigen::MatrixXd design(eu.size(), 2);
  design.col(0).setOnes();
  design.col(1) = -eu.pow(p).matrix();
  const Eigen::Vector2d c = design.colPivHouseholderQr().solve(ly.matrix());
  EnvelopeFit fit;
  fit.A = std::exp(c[0]);
  fit.rate = c[1];
  fit.exponent = p;
  fit.residual = (design * c - ly.matrix()).squaredNorm();
  fit.points = static_cast<std::size_t>(eu.size());
  return fit;
}

}  // namespace

void decay_envelope(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                    const DecayFitOptions& opt, Eigen::ArrayXd& eu, Eigen::ArrayXd& ey) {
  if (u.size() != y.size()) throw DomainError("decay fit needs matching abscissae and values");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0 && y[i] > opt.floor) {
      lo = std::min(lo, u[i]);
      hi = std::max(hi, u[i]);
    }
  }
  if (!(hi > lo)) throw DegenerateInput("no samples above the noise floor");

  const double width = std::log(hi / lo) / opt.bins;
  std::vector<double> bu(opt.bins, 0.0), by(opt.bins, -1.0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!(u[i] > 0.0 && y[i] > opt.floor)) continue;
    const int b = std::min(opt.bins - 1, static_cast<int>(std::log(u[i] / lo) / width));
    if (y[i] > by[b]) {
      by[b] = y[i];
      bu[b] = u[i];
    }
  }
  std::vector<double> keep_u, keep_y;
  for (int b = 0; b < opt.bins; ++b) {
    if (by[b] > 0.0) {
      keep_u.push_back(bu[b]);
      keep_y.push_back(by[b]);
    }
  }
  if (keep_u.size() < 4) throw DegenerateInput("too few envelope points for a decay fit");
  eu = Eigen::Map<Eigen::ArrayXd>(keep_u.data(), static_cast<Eigen::Index>(keep_u.size()));
  ey = Eigen::Map<Eigen::ArrayXd>(keep_y.data(), static_cast<Eigen::Index>(keep_y.size()));
}

EnvelopeFit fit_fixed_exponent(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                               double p, const DecayFitOptions& opt) {
  Eigen::ArrayXd eu, ey;
  decay_envelope(u, y, opt, eu, ey);
  return regress(eu, ey.log(), p);
}

EnvelopeFit fit_free_exponent(const Eigen::Ref<const Eigen::ArrayXd>& u, const Eigen::Ref<const Eigen::ArrayXd>& y,
                              const DecayFitOptions& opt) {
  Eigen::ArrayXd eu, ey;
  decay_envelope(u, y, opt, eu, ey);
  const Eigen::ArrayXd ly = ey.log();
  EnvelopeFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (double p = opt.min_exponent; p <= opt.max_exponent + 1e-12; p += opt.exponent_step) {
    const EnvelopeFit f = regress(eu, ly, p);
    if (f.residual < best.residual) best = f;
  }
  return best;
}

}  // namespace tfloc
