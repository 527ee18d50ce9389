#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "tfloc/fourier.hpp"
#include "tfloc/lcbasis.hpp"
#include "tfloc/schemes.hpp"
#include "tfloc/whitney.hpp"

namespace tfloc {

enum class Parity { none, even, odd };

struct WitnessProblem {
  InterpolationScheme scheme;
  double R1 = 0.0;
  double R2 = 0.0;
  double C = 0.0;
  double eps = 0.0;
  Parity parity = Parity::none;

  /// 4 R1 R2, or 2 R1 R2 for the even/odd variant.
  double D() const;
  /// Bell parameter with 1/(1 - eta) = 1 + eps.
  double eta() const { return eps / (1.0 + eps); }
  void validate() const;
};

struct Constraint {
  enum class Kind { value, transform };
  Kind kind = Kind::value;
  double point = 0.0;
  int order = 0;
};

/// Lambda nodes with |lambda| <= R1 become value constraints and M nodes with
/// |mu| <= R2 transform constraints. For the even/odd variant the node sets
/// are folded onto [0, inf): a symmetric function's data at -p repeats its
/// data at p, so only nodes with p >= 0 are kept.
std::vector<Constraint> collect_constraints(const WitnessProblem& p);

/// Drops round(fraction * size) constraints chosen by a seeded shuffle. The
/// survivors keep their original order.
std::vector<Constraint> thin_constraints(const std::vector<Constraint>& c, double fraction, std::uint64_t seed);

/// The functions the witness is combined from, on the x-axis:
///   none:     g(x) = Phi(2 R2 x)
///   even/odd: g(x) = Phi(R2 (2x - R1)) for x >= 0 and g(-x) = +-g(x).
/// Either way supp g is inside [-R1, R1].
class WitnessBasis {
 public:
  WitnessBasis(std::vector<LocalCosineAtom> atoms, double R1, double R2, Parity parity,
               Eigen::Index intervals = kDefaultIntervals);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<LocalCosineAtom>& atoms() const { return atoms_; }
  Parity parity() const { return parity_; }
  double radius() const { return R1_; }

  double value(std::size_t i, double x) const;
  Jet8 jet(std::size_t i, double x) const;
  /// k-th derivative of the transform of g_i at xi.
  std::complex<double> transform(std::size_t i, double xi, int k) const;

 private:
  double scale() const { return 2.0 * R2_; }
  double sign() const { return parity_ == Parity::odd ? -1.0 : 1.0; }

  std::vector<LocalCosineAtom> atoms_;
  double R1_, R2_;
  Parity parity_;
  // none: atom samples on the atom support; parity: g sampled on [-R1, R1].
  std::vector<SampledFunction> samples_;
};

/// Basis for the even/odd variant. Throws DomainError for Parity::none.
WitnessBasis symmetrize(const WitnessProblem& p, std::vector<LocalCosineAtom> atoms,
                        Eigen::Index intervals = kDefaultIntervals);

/// Whitney decomposition at D, bells, admissible set S and the x-axis basis.
struct WitnessSetup {
  WhitneyDecomposition decomposition;
  std::vector<BellWindow> bells;
  AdmissibleSet admissible;
  WitnessBasis basis;
};
WitnessSetup witness_setup(const WitnessProblem& p, Eigen::Index intervals = kDefaultIntervals);

/// Row per constraint: g_i^{(r)}(lambda) or (F g_i)^{(k)}(mu).
Eigen::MatrixXcd assemble_constraints(const WitnessBasis& basis, const std::vector<Constraint>& constraints);

struct WitnessOptions {
  double thin = 0.0;
  std::uint64_t seed = 1;
  Eigen::Index intervals = kDefaultIntervals;
  double null_threshold = 1e-10;  // relative to the largest singular value
};

struct WitnessResult {
  double D = 0.0;
  std::size_t admissible_size = 0;
  std::vector<Constraint> constraints;
  Eigen::VectorXd coefficients;  // unit norm, indexed like the admissible set
  Eigen::Index null_dim = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;

  double residual = 0.0;      // max |constraint value| of f, re-evaluated from f itself
  SupPoint sup_cert;
  double l2_norm = 0.0;
  double expected_l2 = 0.0;   // 1/sqrt(2 R2), or 1/sqrt(R2) for even/odd
  double sup_floor = 0.0;     // 1/sqrt(D)
  double support_leak = 0.0;  // max |f(x)| over R1 < |x| <= 2 R1
  std::optional<SampledFunction> function;  // f on [-R1, R1]
};

/// Certificates for a given coefficient vector.
WitnessResult evaluate_witness(const WitnessProblem& p, const WitnessBasis& basis,
                               const std::vector<Constraint>& constraints, const Eigen::VectorXd& coefficients,
                               Eigen::Index intervals = kDefaultIntervals);

/// Null vector of the constraint matrix through the SVD: the right singular
/// vector of the smallest singular value. null_dim = 0 is a legitimate
/// outcome (the constraints pin down the span of S).
WitnessResult solve_witness(const WitnessProblem& p, const WitnessOptions& opt = {});

struct TailReport {
  std::vector<double> max_per_order;  // max |(F f)^{(k)}(xi)| over R2 < |xi| <= 4 R2
  double weighted_tail_sum = 0.0;     // sum over stored |mu| > R2 of |(F f)^{(k(mu))}(mu)| |mu|^U
  std::size_t tail_nodes = 0;
};

/// Throws DomainError when the result has no null space.
TailReport tail_certificate(const WitnessResult& r, const WitnessProblem& p, int samples_per_side = 400);

}  // namespace tfloc
