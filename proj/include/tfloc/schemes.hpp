#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace tfloc {

/// One multiset entry: a point together with a derivative order.
struct Node {
  double point = 0.0;
  int order = 0;

  friend bool operator==(const Node&, const Node&) = default;
};

/// Multiset of nodes kept sorted by |point|. `extent` is the radius up to
/// which the generator produced every node, so counts at R <= extent are exact.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::vector<Node> nodes, double extent);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  double extent() const { return extent_; }
  int max_order() const;

  /// Multiset union.
  NodeSet merged(const NodeSet& other) const;

 private:
  std::vector<Node> nodes_;
  double extent_ = 0.0;
};

/// n(R) = #{entries with |point| <= R}, every (point, order) entry counted once.
std::size_t counting_function(const NodeSet& nodes, double R);

/// Hypotheses of an interpolation formula: nodes Lambda (values) and M
/// (transform values), growth exponent L and weight-bound degree U.
struct InterpolationScheme {
  std::string name;
  NodeSet lambda;
  NodeSet m;
  double L = 0.0;
  double U = 0.0;

  /// max order of M <= L and n_M(R) <= R^L for R in [R_from, m.extent()],
  /// checked at every jump of the counting function.
  bool growth_bound_holds(double R_from) const;
};

/// Lambda = M = { +-sqrt(n) : 0 <= n <= max_n } (0 once), orders 0. With the
/// flag, (0, 1) is added to both. L = 3 so that 1 + 2[R^2] <= R^L for R >= 3.
InterpolationScheme rv_scheme(int max_n, bool include_derivative_nodes);

/// Lambda = { +-log(n) / (4 pi) : 1 <= n <= max_n }, M = { +-gamma }.
/// Throws InputError unless zeros are positive and ascending.
InterpolationScheme zeta_scheme(std::span<const double> zeros, int max_n);

/// Zero ordinates, one per line; blank lines and '#' comments ignored.
std::vector<double> read_zeros(std::istream& in);
std::vector<double> load_zeros(const std::filesystem::path& path);

/// N(T) = #{gamma : 0 < gamma < T}.
std::size_t zeta_count(std::span<const double> zeros, double T);

struct BoundAudit {
  Eigen::VectorXd R1;
  Eigen::VectorXd R2;
  Eigen::MatrixXd slack;  // n_Lambda(R1) + n_M(R2) - 4 R1 R2, rows indexed by R1
  double eps = 0.0;
  double min_slack = 0.0;
  double min_R1 = 0.0;
  double min_R2 = 0.0;
  /// Smallest C >= 0 with slack >= -C log^{2+eps}(4 R1 R2) on the grid.
  double fitted_C = 0.0;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Grid lo, lo + step, ... <= hi (inclusive up to rounding).
Eigen::VectorXd grid_points(Range r, double step);

/// Throws ExtentError when a range reaches past the stored nodes.
BoundAudit audit_bound(const InterpolationScheme& s, Range R1, Range R2, double step, double eps);

struct ZetaMargin {
  double T = 0.0;
  std::size_t count = 0;  // N(T)
  double rhs = 0.0;       // (T/2pi) log(T/(2 pi e)) - C log^{2+eps}(T)
  double margin = 0.0;    // count - rhs
};

struct ZetaCheck {
  bool pass = true;
  double C = 0.0;
  double eps = 0.0;
  ZetaMargin worst;
  /// Smallest C >= 0 passing on the checked points.
  double minimal_C = 0.0;
  std::vector<ZetaMargin> table;
};

/// Checks N(T) >= (T/2pi) log(T/(2 pi e)) - C log^{2+eps}(T) for T in
/// [T_min, T_max]. N is a left-continuous step function and the main term
/// increases for T > 2 pi, so the worst points are the ordinates themselves
/// (approached from the left) and T_max. Throws ExtentError when T_max passes
/// the last tabulated ordinate, DomainError unless 1 < T_min <= T_max.
ZetaCheck riemann_von_mangoldt_check(std::span<const double> zeros, double T_min, double T_max, double eps, double C);

}  // namespace tfloc
