#include "tfloc/lcbasis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "tfloc/errors.hpp"
#include "tfloc/parallel.hpp"

namespace tfloc {
namespace {

using std::numbers::pi;

}  // namespace

LocalCosineAtom make_atom(const BellWindow& bell, int k) {
  if (k < 0) throw DomainError("frequency index must be nonnegative");
  LocalCosineAtom a;
  a.piece = bell.piece;
  a.k = k;
  a.delta = bell.length();
  a.alpha = bell.left;
  a.xi = (2.0 * k + 1.0) / (4.0 * a.delta);
  a.bell = bell;
  return a;
}

double atom_value(const LocalCosineAtom& a, double x) {
  const double b = bell_value(a.bell, x);
  if (b == 0.0) return 0.0;
  return std::sqrt(2.0 / a.delta) * b * std::cos(2.0 * pi * a.xi * (x - a.alpha));
}

Jet8 atom_jet(const LocalCosineAtom& a, double x) {
  if (x <= a.support_left() || x >= a.support_right()) return Jet8();
  const Jet8 b = bell_jet(a.bell, x);
  const Jet8 phase = Jet8::variable(x - a.alpha) * (2.0 * pi * a.xi);
  return (b * cos(phase)) * std::sqrt(2.0 / a.delta);
}

std::vector<LocalCosineAtom> basis_atoms(const std::vector<BellWindow>& bells, double xi_max) {
  std::vector<LocalCosineAtom> out;
  for (const auto& b : bells)
    for (int k = 0; (2.0 * k + 1.0) / (4.0 * b.length()) < xi_max; ++k) out.push_back(make_atom(b, k));
  return out;
}

std::vector<LocalCosineAtom> admissible_atoms(const std::vector<BellWindow>& bells, const AdmissibleSet& s) {
  std::vector<LocalCosineAtom> out;
  out.reserve(s.size());
  for (const auto& e : s.entries) out.push_back(make_atom(bells.at(e.piece), e.k));
  return out;
}

SampledFunction sample_atom(const LocalCosineAtom& a, Eigen::Index intervals) {
  return SampledFunction::sample_real([&a](double x) { return atom_value(a, x); }, a.support_left(),
                                      a.support_right(), intervals);
}

Eigen::MatrixXd gram_matrix(const std::vector<LocalCosineAtom>& atoms, Eigen::Index intervals) {
  const auto n = static_cast<Eigen::Index>(atoms.size());
  if (n == 0) return {};
  double lo = atoms.front().support_left(), hi = atoms.front().support_right();
  for (const auto& a : atoms) {
    lo = std::min(lo, a.support_left());
    hi = std::max(hi, a.support_right());
  }
  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(intervals + 1, lo, hi);
  const double h = (hi - lo) / static_cast<double>(intervals);

  // Bells are shared by every atom on a piece; sample each once.
  std::map<std::size_t, Eigen::VectorXd> bell_samples;
  for (const auto& a : atoms) bell_samples.try_emplace(a.piece);
  std::vector<std::pair<const std::size_t, Eigen::VectorXd>*> slots;
  for (auto& kv : bell_samples) slots.push_back(&kv);
  parallel_for(0, slots.size(), [&](std::size_t s) {
    const auto piece = slots[s]->first;
    const auto it = std::find_if(atoms.begin(), atoms.end(), [piece](const auto& a) { return a.piece == piece; });
    Eigen::VectorXd v(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = bell_value(it->bell, x[i]);
    slots[s]->second = std::move(v);
  });

  Eigen::MatrixXd samples(x.size(), n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto& a = atoms[static_cast<std::size_t>(c)];
    const Eigen::ArrayXd cosine = (2.0 * pi * a.xi * (x.array() - a.alpha)).cos();
    samples.col(c) = (std::sqrt(2.0 / a.delta) * bell_samples[a.piece].array() * cosine).matrix();
  }
  Eigen::VectorXd w = Eigen::VectorXd::Constant(x.size(), h);
  w[0] = w[x.size() - 1] = 0.5 * h;
  return samples.transpose() * w.asDiagonal() * samples;
}

double gram_check(const std::vector<LocalCosineAtom>& atoms, Eigen::Index intervals) {
  if (atoms.empty()) return 0.0;
  const Eigen::MatrixXd g = gram_matrix(atoms, intervals);
  return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

double plancherel_defect(const LocalCosineAtom& a, Eigen::Index intervals) {
  const SampledFunction f = sample_atom(a, intervals);
  const double time_energy = inner_product(f, f).real();

  // |F Phi|^2 is the transform of an autocorrelation supported on an interval
  // of half-width equal to the support length, so a frequency step below half
  // its reciprocal makes the trapezoid sum exact up to truncation.
  const double width = a.support_right() - a.support_left();
  const double dxi = 0.5 / width;
  double sum = 0.5 * std::norm(ft_at(f, 0.0));
  double window_peak = 0.0;
  int since_check = 0;
  const int per_unit = static_cast<int>(std::ceil(1.0 / dxi));
  for (int i = 1;; ++i) {
    const double v = std::norm(ft_at(f, i * dxi));
    sum += v;
    window_peak = std::max(window_peak, v);
    if (++since_check == per_unit) {
      if (i * dxi > 2.0 * a.xi && window_peak < 1e-18) break;
      window_peak = 0.0;
      since_check = 0;
    }
    if (i * dxi > 1e4) throw ResolutionError("transform did not decay within |xi| <= 1e4");
  }
  const double freq_energy = 2.0 * sum * dxi;
  return std::abs(1.0 - freq_energy / time_energy);
}

ConcentrationReport concentration_check(const LocalCosineAtom& a, const Eigen::Ref<const Eigen::VectorXd>& xi,
                                        int order, Eigen::Index intervals) {
  const SampledFunction f = sample_atom(a, intervals);
  const double eta = a.bell.cutoff->eta();
  const double p = 1.0 - eta;
  const double scale = std::sqrt(a.delta);

  Eigen::ArrayXd u(xi.size()), y(xi.size());
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    u[i] = a.delta * std::min(std::abs(xi[i] - a.xi), std::abs(xi[i] + a.xi));
    y[i] = std::abs(ft_at(f, xi[i], order)) / scale;
  }

  const DecayFitOptions opt;
  ConcentrationReport r;
  r.order = order;
  r.bound = fit_fixed_exponent(u, y, p, opt);
  r.free = fit_free_exponent(u, y, opt);
  if (!(r.bound.rate > 0.0)) throw DecayViolation("fitted decay rate is not positive");

  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    if (y[i] <= opt.floor) continue;
    const double um = a.delta * std::abs(xi[i] - a.xi);
    const double up = a.delta * std::abs(xi[i] + a.xi);
    const double bound = r.bound.A * (std::exp(-r.bound.rate * std::pow(um, p)) + std::exp(-r.bound.rate * std::pow(up, p)));
    r.worst_ratio = std::max(r.worst_ratio, y[i] / bound);
  }
  return r;
}

DerivativeBoundReport derivative_bound_check(const LocalCosineAtom& a, int n, double D, double T1, double T2, double C,
                                             const Eigen::Ref<const Eigen::VectorXd>& xi, double c_limit,
                                             Eigen::Index intervals) {
  DerivativeBoundReport r;
  const double eta = a.bell.cutoff->eta();
  r.admissible = a.k < a.delta - C * std::pow(std::log(D), 1.0 / (1.0 - eta));
  if (!r.admissible) return r;  // outside the hypothesis: nothing to check

  const SampledFunction f = sample_atom(a, intervals);
  const double weight = std::pow(D, T1);
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    if (!(std::abs(xi[i]) > 0.5)) continue;
    const double v = std::abs(ft_at(f, xi[i], n)) * weight * std::pow(std::abs(xi[i]), T2);
    r.measured_c = std::max(r.measured_c, v);
  }
  r.pass = r.measured_c <= c_limit;
  r.margin = r.measured_c > 0.0 ? c_limit / r.measured_c : std::numeric_limits<double>::infinity();
  return r;
}

double lk_ratio(const SampledFunction& f) {
  if (f.left() < 0.0) throw DomainError("Landau-Kolmogorov check needs a grid on the half-line");
  const Eigen::VectorXd v = f.samples().real();
  const Eigen::Index n = v.size();
  const double h = f.step();
  if (n < 5) throw DegenerateInput("too few samples");

  double d1 = 0.0, d2 = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double first, second;
    if (i == 0) {
      first = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
      second = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (h * h);
    } else if (i == n - 1) {
      first = (3.0 * v[i] - 4.0 * v[i - 1] + v[i - 2]) / (2.0 * h);
      second = (2.0 * v[i] - 5.0 * v[i - 1] + 4.0 * v[i - 2] - v[i - 3]) / (h * h);
    } else {
      first = (v[i + 1] - v[i - 1]) / (2.0 * h);
      second = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
    }
    d1 = std::max(d1, std::abs(first));
    d2 = std::max(d2, std::abs(second));
  }
  const double d0 = v.cwiseAbs().maxCoeff();
  if (d0 == 0.0 || d2 == 0.0) throw DegenerateInput("Landau-Kolmogorov ratio undefined for this function");
  return d1 / (std::sqrt(d0) * std::sqrt(d2));
}

}  // namespace tfloc
