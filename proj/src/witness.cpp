#include "tfloc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "tfloc/errors.hpp"
#include "tfloc/parallel.hpp"
#include "tfloc/windows.hpp"

namespace tfloc {

double WitnessProblem::D() const { return (parity == Parity::none ? 4.0 : 2.0) * R1 * R2; }

void WitnessProblem::validate() const {
  if (!(R1 > 1.0) || !(R2 > 1.0)) throw DomainError("radii must exceed 1");
  if (!(C > 0.0) || !(eps > 0.0)) throw DomainError("C and eps must be positive");
}

std::vector<Constraint> collect_constraints(const WitnessProblem& p) {
  if (p.R1 > p.scheme.lambda.extent() * (1 + 1e-12)) throw ExtentError("R1 exceeds the generated Lambda nodes");
  if (p.R2 > p.scheme.m.extent() * (1 + 1e-12)) throw ExtentError("R2 exceeds the generated M nodes");
  const bool folded = p.parity != Parity::none;
  std::vector<Constraint> out;
  for (const auto& n : p.scheme.lambda.nodes()) {
    if (std::abs(n.point) > p.R1) break;
    if (folded && n.point < 0.0) continue;
    out.push_back({Constraint::Kind::value, n.point, n.order});
  }
  for (const auto& n : p.scheme.m.nodes()) {
    if (std::abs(n.point) > p.R2) break;
    if (folded && n.point < 0.0) continue;
    out.push_back({Constraint::Kind::transform, n.point, n.order});
  }
  return out;
}

std::vector<Constraint> thin_constraints(const std::vector<Constraint>& c, double fraction, std::uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw DomainError("thinning fraction must lie in [0, 1]");
  const std::size_t n = c.size();
  const auto drop = static_cast<std::size_t>(std::lround(fraction * static_cast<double>(n)));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // Fisher-Yates on raw engine output so the selection does not depend on the
  // standard library's distribution implementation.
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    std::swap(order[i - 1], order[r % bound]);
  }
  std::vector<std::size_t> keep(order.begin() + static_cast<std::ptrdiff_t>(drop), order.end());
  std::sort(keep.begin(), keep.end());
  std::vector<Constraint> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(c[i]);
  return out;
}

WitnessBasis::WitnessBasis(std::vector<LocalCosineAtom> atoms, double R1, double R2, Parity parity,
                           Eigen::Index intervals)
    : atoms_(std::move(atoms)), R1_(R1), R2_(R2), parity_(parity) {
  std::vector<std::optional<SampledFunction>> tmp(atoms_.size());
  parallel_for(0, atoms_.size(), [&](std::size_t i) {
    if (parity_ == Parity::none) {
      tmp[i] = sample_atom(atoms_[i], intervals);
    } else {
      const Symmetry sym = parity_ == Parity::even ? Symmetry::even : Symmetry::odd;
      tmp[i] = SampledFunction::sample_real([this, i](double x) { return value(i, x); }, -R1_, R1_, intervals, sym);
    }
  });
  samples_.reserve(tmp.size());
  for (auto& s : tmp) samples_.push_back(std::move(*s));
}

double WitnessBasis::value(std::size_t i, double x) const {
  const auto& a = atoms_[i];
  if (parity_ == Parity::none) return atom_value(a, scale() * x);
  const double shift = R1_ * R2_;
  if (x >= 0.0) return atom_value(a, scale() * x - shift);
  return sign() * atom_value(a, -scale() * x - shift);
}

Jet8 WitnessBasis::jet(std::size_t i, double x) const {
  const auto& a = atoms_[i];
  if (parity_ == Parity::none) return atom_jet(a, scale() * x).affine_pullback(scale());
  const double shift = R1_ * R2_;
  if (x >= 0.0) return atom_jet(a, scale() * x - shift).affine_pullback(scale());
  return atom_jet(a, -scale() * x - shift).affine_pullback(-scale()) * sign();
}

std::complex<double> WitnessBasis::transform(std::size_t i, double xi, int k) const {
  if (parity_ != Parity::none) return ft_at(samples_[i], xi, k);
  // F[Phi(c .)]^{(k)}(xi) = c^{-(k+1)} (F Phi)^{(k)}(xi / c)
  const double c = scale();
  return std::pow(c, -(k + 1)) * ft_at(samples_[i], xi / c, k);
}

WitnessBasis symmetrize(const WitnessProblem& p, std::vector<LocalCosineAtom> atoms, Eigen::Index intervals) {
  if (p.parity == Parity::none) throw DomainError("symmetrize needs an even or odd parity");
  return WitnessBasis(std::move(atoms), p.R1, p.R2, p.parity, intervals);
}

WitnessSetup witness_setup(const WitnessProblem& p, Eigen::Index intervals) {
  p.validate();
  auto w = whitney_decompose(p.D());
  auto bells = build_bells(w, p.eta());
  auto s = admissible_set(w, p.C, p.eps);
  auto atoms = admissible_atoms(bells, s);
  WitnessBasis basis = p.parity == Parity::none ? WitnessBasis(std::move(atoms), p.R1, p.R2, Parity::none, intervals)
                                                : symmetrize(p, std::move(atoms), intervals);
  return {std::move(w), std::move(bells), std::move(s), std::move(basis)};
}

Eigen::MatrixXcd assemble_constraints(const WitnessBasis& basis, const std::vector<Constraint>& constraints) {
  const auto rows = static_cast<Eigen::Index>(constraints.size());
  const auto cols = static_cast<Eigen::Index>(basis.size());
  for (const auto& c : constraints)
    if (c.order < 0 || c.order > kMaxDerivativeOrder) throw UnsupportedOrder("constraint order must be in [0, 8]");
  Eigen::MatrixXcd A(rows, cols);
  parallel_for(0, basis.size(), [&](std::size_t j) {
    const auto col = static_cast<Eigen::Index>(j);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const auto& c = constraints[static_cast<std::size_t>(r)];
      A(r, col) = c.kind == Constraint::Kind::value ? std::complex<double>(basis.jet(j, c.point).derivative(c.order))
                                                    : basis.transform(j, c.point, c.order);
    }
  });
  return A;
}

WitnessResult evaluate_witness(const WitnessProblem& p, const WitnessBasis& basis,
                               const std::vector<Constraint>& constraints, const Eigen::VectorXd& coefficients,
                               Eigen::Index intervals) {
  if (static_cast<std::size_t>(coefficients.size()) != basis.size())
    throw DomainError("coefficient vector does not match the basis");
  WitnessResult r;
  r.D = p.D();
  r.admissible_size = basis.size();
  r.constraints = constraints;
  r.coefficients = coefficients;

  auto f_at = [&](double x) {
    double s = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coefficients[static_cast<Eigen::Index>(i)] != 0.0) s += coefficients[static_cast<Eigen::Index>(i)] * basis.value(i, x);
    return s;
  };

  Eigen::VectorXcd samples(intervals + 1);
  const double h = 2.0 * p.R1 / static_cast<double>(intervals);
  parallel_for(0, static_cast<std::size_t>(intervals + 1),
               [&](std::size_t i) { samples[static_cast<Eigen::Index>(i)] = f_at(-p.R1 + static_cast<double>(i) * h); });
  const Symmetry sym = p.parity == Parity::even ? Symmetry::even
                       : p.parity == Parity::odd ? Symmetry::odd
                                                 : Symmetry::none;
  r.function.emplace(-p.R1, p.R1, std::move(samples), sym);

  for (const auto& c : constraints) {
    double v;
    if (c.kind == Constraint::Kind::value) {
      double s = 0.0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        s += coefficients[static_cast<Eigen::Index>(i)] * basis.jet(i, c.point).derivative(c.order);
      v = std::abs(s);
    } else {
      v = std::abs(ft_at(*r.function, c.point, c.order));
    }
    r.residual = std::max(r.residual, v);
  }

  r.l2_norm = l2_norm(*r.function);
  r.sup_cert = sup_norm(*r.function);
  r.expected_l2 = 1.0 / std::sqrt(p.parity == Parity::none ? 2.0 * p.R2 : p.R2);
  r.sup_floor = 1.0 / std::sqrt(r.D);
  constexpr int kLeakSamples = 2000;
  for (int i = 1; i <= kLeakSamples; ++i) {
    const double x = p.R1 * (1.0 + static_cast<double>(i) / kLeakSamples);
    r.support_leak = std::max({r.support_leak, std::abs(f_at(x)), std::abs(f_at(-x))});
  }
  return r;
}

WitnessResult solve_witness(const WitnessProblem& p, const WitnessOptions& opt) {
  WitnessSetup setup = witness_setup(p, opt.intervals);
  const auto constraints = thin_constraints(collect_constraints(p), opt.thin, opt.seed);
  const auto n = static_cast<Eigen::Index>(setup.basis.size());
  if (n == 0) {
    WitnessResult r;
    r.D = p.D();
    r.constraints = constraints;
    return r;
  }

  const Eigen::MatrixXcd A = assemble_constraints(setup.basis, constraints);
  // Real coefficients: a complex transform row imposes both its real and
  // imaginary part; value rows are real already.
  std::vector<Eigen::RowVectorXd> rows;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    rows.push_back(A.row(i).real());
    if (constraints[static_cast<std::size_t>(i)].kind == Constraint::Kind::transform) rows.push_back(A.row(i).imag());
  }
  Eigen::MatrixXd real(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) real.row(static_cast<Eigen::Index>(i)) = rows[i];

  Eigen::VectorXd coefficients = Eigen::VectorXd::Zero(n);
  Eigen::Index null_dim = n;
  double sigma_min = 0.0, sigma_max = 0.0;
  if (real.rows() == 0) {
    coefficients[0] = 1.0;
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    sigma_max = sv[0];
    const Eigen::Index rank = (sv.array() >= opt.null_threshold * sigma_max).count();
    null_dim = n - rank;
    sigma_min = real.rows() >= n ? sv[n - 1] : 0.0;
    coefficients = svd.matrixV().col(n - 1);
    Eigen::Index big = 0;
    coefficients.cwiseAbs().maxCoeff(&big);
    if (coefficients[big] < 0.0) coefficients = -coefficients;
  }

  WitnessResult r = evaluate_witness(p, setup.basis, constraints, coefficients, opt.intervals);
  r.null_dim = null_dim;
  r.sigma_min = sigma_min;
  r.sigma_max = sigma_max;
  return r;
}

TailReport tail_certificate(const WitnessResult& r, const WitnessProblem& p, int samples_per_side) {
  if (r.null_dim < 1 || !r.function) throw DomainError("tail certificate needs a witness with null_dim >= 1");
  const auto& f = *r.function;
  TailReport t;
  const int top = std::min(kMaxTransformOrder, static_cast<int>(std::floor(p.scheme.L)));
  t.max_per_order.assign(static_cast<std::size_t>(top + 1), 0.0);
  parallel_for(0, static_cast<std::size_t>(top + 1), [&](std::size_t k) {
    double m = 0.0;
    for (int i = 1; i <= samples_per_side; ++i) {
      const double xi = p.R2 + 3.0 * p.R2 * static_cast<double>(i) / samples_per_side;
      m = std::max({m, std::abs(ft_at(f, xi, static_cast<int>(k))), std::abs(ft_at(f, -xi, static_cast<int>(k)))});
    }
    t.max_per_order[k] = m;
  });
  for (const auto& n : p.scheme.m.nodes()) {
    if (std::abs(n.point) <= p.R2) continue;
    t.weighted_tail_sum += std::abs(ft_at(f, n.point, n.order)) * std::pow(std::abs(n.point), p.scheme.U);
    ++t.tail_nodes;
  }
  return t;
}

}  // namespace tfloc
