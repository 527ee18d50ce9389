#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "tfloc/fit.hpp"
#include "tfloc/fourier.hpp"
#include "tfloc/jet.hpp"
#include "tfloc/whitney.hpp"
#include "tfloc/windows.hpp"

namespace tfloc {

/// Phi_{j,k}(x) = sqrt(2/delta) b_j(x) cos(2 pi xi (x - alpha)),
/// xi = (2k+1) / (4 delta). The cosine is even about alpha and odd about
/// alpha + delta, which together with the bell symmetry makes atoms on
/// adjacent pieces orthogonal.
struct LocalCosineAtom {
  std::size_t piece = 0;
  int k = 0;
  double delta = 0.0;  // atom interval length (bell.length())
  double alpha = 0.0;  // atom interval left end
  double xi = 0.0;
  BellWindow bell;

  double support_left() const { return bell.support_left(); }
  double support_right() const { return bell.support_right(); }
};

LocalCosineAtom make_atom(const BellWindow& bell, int k);

double atom_value(const LocalCosineAtom& a, double x);
Jet8 atom_jet(const LocalCosineAtom& a, double x);

/// All atoms with xi_{j,k} < xi_max, ordered by piece and then by k.
std::vector<LocalCosineAtom> basis_atoms(const std::vector<BellWindow>& bells, double xi_max);

/// Atoms indexed by an admissible set, in the set's order.
std::vector<LocalCosineAtom> admissible_atoms(const std::vector<BellWindow>& bells, const AdmissibleSet& s);

/// The atom sampled on its own support.
SampledFunction sample_atom(const LocalCosineAtom& a, Eigen::Index intervals = kDefaultIntervals);

/// Trapezoid Gram matrix on one grid spanning the union of the supports.
Eigen::MatrixXd gram_matrix(const std::vector<LocalCosineAtom>& atoms, Eigen::Index intervals = kDefaultIntervals);

/// max_{a,b} |<Phi_a, Phi_b> - delta_ab|.
double gram_check(const std::vector<LocalCosineAtom>& atoms, Eigen::Index intervals = kDefaultIntervals);

/// |1 - int |F Phi|^2 / int |Phi|^2| with the frequency integral extended until
/// the transform has decayed below 1e-9.
double plancherel_defect(const LocalCosineAtom& a, Eigen::Index intervals = Eigen::Index(1) << 13);

struct ConcentrationReport {
  int order = 0;          // transform derivative order n
  EnvelopeFit bound;      // exponent held at 1 - eta: the (A, a) of the bound
  EnvelopeFit free;       // exponent fitted as well
  double worst_ratio = 0; // max |F Phi^{(n)}| / bound over samples above the floor
};

/// Fits |F Phi^{(n)}(xi)| <= delta^{1/2} A (exp(-a (delta|xi - xi0|)^{1-eta}) +
/// exp(-a (delta|xi + xi0|)^{1-eta})) on the given frequency grid.
/// Throws DecayViolation when the fitted a is not positive.
ConcentrationReport concentration_check(const LocalCosineAtom& a, const Eigen::Ref<const Eigen::VectorXd>& xi,
                                        int order = 0, Eigen::Index intervals = Eigen::Index(1) << 14);

struct DerivativeBoundReport {
  bool admissible = false;  // k < delta - C log^{1/(1-eta)}(D)
  bool pass = true;
  double measured_c = 0.0;  // sup |F Phi^{(n)}(xi)| D^{T1} |xi|^{T2} over |xi| > 1/2
  double margin = std::numeric_limits<double>::infinity();  // c_limit / measured_c
};

DerivativeBoundReport derivative_bound_check(const LocalCosineAtom& a, int n, double D, double T1, double T2, double C,
                                             const Eigen::Ref<const Eigen::VectorXd>& xi,
                                             double c_limit = std::numeric_limits<double>::infinity(),
                                             Eigen::Index intervals = Eigen::Index(1) << 14);

/// ||f'|| / (||f||^{1/2} ||f''||^{1/2}) in sup norms on a half-line grid,
/// derivatives by second-order differences. Throws DegenerateInput when f or
/// f'' vanishes identically.
double lk_ratio(const SampledFunction& f);

}  // namespace tfloc
