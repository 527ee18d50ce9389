#include "tfloc/fourier.hpp"

#include <cmath>
#include <numbers>

#include "tfloc/errors.hpp"

namespace tfloc {
namespace {

using std::numbers::pi;
using cd = std::complex<double>;

constexpr Eigen::Index kReseed = 256;

}  // namespace

SampledFunction::SampledFunction(double left, double right, Eigen::VectorXcd samples, Symmetry symmetry)
    : left_(left), right_(right), samples_(std::move(samples)), symmetry_(symmetry) {
  if (!(right > left)) throw DomainError("sampled function needs left < right");
  if (samples_.size() < 3) throw DomainError("sampled function needs at least three samples");
  step_ = (right - left) / static_cast<double>(samples_.size() - 1);
  const double scale = std::max(1.0, samples_.cwiseAbs().maxCoeff());
  if (std::abs(samples_[0]) > 1e-9 * scale || std::abs(samples_[samples_.size() - 1]) > 1e-9 * scale)
    throw DomainError("samples must vanish at the support endpoints");
}

SampledFunction SampledFunction::sample(const std::function<cd(double)>& f, double left, double right,
                                        Eigen::Index intervals, Symmetry symmetry) {
  if (intervals < 2) throw DomainError("need at least two intervals");
  Eigen::VectorXcd s(intervals + 1);
  const double h = (right - left) / static_cast<double>(intervals);
  for (Eigen::Index i = 0; i <= intervals; ++i) s[i] = f(left + static_cast<double>(i) * h);
  return SampledFunction(left, right, std::move(s), symmetry);
}

SampledFunction SampledFunction::sample_real(const std::function<double(double)>& f, double left, double right,
                                             Eigen::Index intervals, Symmetry symmetry) {
  return sample([&f](double x) { return cd(f(x), 0.0); }, left, right, intervals, symmetry);
}

Eigen::VectorXd SampledFunction::grid() const { return Eigen::VectorXd::LinSpaced(size(), left_, right_); }

SampledFunction SampledFunction::dilated(double s) const {
  if (!(s > 0.0)) throw DomainError("dilation factor must be positive");
  return SampledFunction(s * left_, s * right_, samples_, symmetry_);
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& o) {
  if (o.size() != size() || std::abs(o.left_ - left_) > 1e-12 || std::abs(o.right_ - right_) > 1e-12)
    throw DomainError("sampled functions live on different grids");
  samples_ += o.samples_;
  if (o.symmetry_ != symmetry_) symmetry_ = Symmetry::none;
  return *this;
}

SampledFunction& SampledFunction::operator*=(cd s) {
  samples_ *= s;
  return *this;
}

cd ft_at(const SampledFunction& f, double xi, int m) {
  if (m < 0 || m > kMaxTransformOrder) throw UnsupportedOrder("transform derivative order must be in [0, 8]");
  const auto& s = f.samples();
  const Eigen::Index n = s.size();
  const double h = f.step();
  const cd rotate = std::polar(1.0, -2.0 * pi * h * xi);
  cd phase;
  cd sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = f.x(i);
    if (i % kReseed == 0) phase = std::polar(1.0, -2.0 * pi * x * xi);
    cd term = s[i] * phase;
    if (m > 0) {
      const cd moment(0.0, -2.0 * pi * x);
      for (int k = 0; k < m; ++k) term *= moment;
    }
    sum += (i == 0 || i == n - 1) ? 0.5 * term : term;
    phase *= rotate;
  }
  return h * sum;
}

Eigen::VectorXcd ft_sweep(const SampledFunction& f, const Eigen::Ref<const Eigen::VectorXd>& xi, int m) {
  Eigen::VectorXcd out(xi.size());
  for (Eigen::Index i = 0; i < xi.size(); ++i) out[i] = ft_at(f, xi[i], m);
  return out;
}

SupPoint sup_norm(const SampledFunction& f) {
  const Eigen::VectorXd a = f.samples().cwiseAbs();
  Eigen::Index i = 0;
  const double peak = a.maxCoeff(&i);
  SupPoint out{f.x(i), peak};
  if (i > 0 && i + 1 < a.size()) {
    const double ym = a[i - 1], yp = a[i + 1];
    const double curvature = ym - 2.0 * peak + yp;
    if (curvature < 0.0) {
      const double offset = 0.5 * (ym - yp) / curvature;
      out.x += offset * f.step();
      out.value = peak - 0.25 * (ym - yp) * offset;
    }
  }
  return out;
}

std::complex<double> inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.size() != g.size()) throw DomainError("inner product needs a shared grid");
  const auto& a = f.samples();
  const auto& b = g.samples();
  const Eigen::Index n = a.size();
  cd s = a.dot(b);  // Eigen's dot conjugates the first argument
  s -= 0.5 * (std::conj(a[0]) * b[0] + std::conj(a[n - 1]) * b[n - 1]);
  return std::conj(s) * f.step();
}

double l2_norm(const SampledFunction& f) { return std::sqrt(inner_product(f, f).real()); }

}  // namespace tfloc
