#include "tfloc/schemes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <sstream>

#include "tfloc/errors.hpp"
#include "tfloc/parallel.hpp"

namespace tfloc {
namespace {

using std::numbers::pi;

bool by_radius(const Node& a, const Node& b) {
  const double ra = std::abs(a.point), rb = std::abs(b.point);
  if (ra != rb) return ra < rb;
  if (a.point != b.point) return a.point < b.point;
  return a.order < b.order;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

NodeSet::NodeSet(std::vector<Node> nodes, double extent) : nodes_(std::move(nodes)), extent_(extent) {
  std::sort(nodes_.begin(), nodes_.end(), by_radius);
}

int NodeSet::max_order() const {
  int m = 0;
  for (const auto& n : nodes_) m = std::max(m, n.order);
  return m;
}

NodeSet NodeSet::merged(const NodeSet& other) const {
  std::vector<Node> all = nodes_;
  all.insert(all.end(), other.nodes_.begin(), other.nodes_.end());
  return NodeSet(std::move(all), std::min(extent_, other.extent_));
}

std::size_t counting_function(const NodeSet& nodes, double R) {
  if (R < 0.0) return 0;
  const auto& v = nodes.nodes();
  const auto it = std::upper_bound(v.begin(), v.end(), R, [](double r, const Node& n) { return r < std::abs(n.point); });
  return static_cast<std::size_t>(it - v.begin());
}

bool InterpolationScheme::growth_bound_holds(double R_from) const {
  if (m.max_order() > L) return false;
  const auto& v = m.nodes();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double R = std::abs(v[i].point);
    if (R < R_from || R > m.extent()) continue;
    // Count at the jump includes every node of this radius.
    if (static_cast<double>(counting_function(m, R)) > std::pow(R, L)) return false;
  }
  return true;
}

InterpolationScheme rv_scheme(int max_n, bool include_derivative_nodes) {
  if (max_n < 1) throw DomainError("rv scheme needs max_n >= 1");
  std::vector<Node> nodes{{0.0, 0}};
  for (int n = 1; n <= max_n; ++n) {
    const double r = std::sqrt(static_cast<double>(n));
    nodes.push_back({r, 0});
    nodes.push_back({-r, 0});
  }
  if (include_derivative_nodes) nodes.push_back({0.0, 1});
  const double extent = std::sqrt(static_cast<double>(max_n));
  InterpolationScheme s;
  s.name = "rv";
  s.lambda = NodeSet(nodes, extent);
  s.m = NodeSet(std::move(nodes), extent);
  s.L = 3.0;
  s.U = 0.0;
  return s;
}

InterpolationScheme zeta_scheme(std::span<const double> zeros, int max_n) {
  if (max_n < 1) throw DomainError("zeta scheme needs max_n >= 1");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!(zeros[i] > 0.0)) throw InputError("zero ordinates must be positive");
    if (i > 0 && zeros[i] < zeros[i - 1]) throw InputError("zero ordinates must be ascending");
  }
  std::vector<Node> lam{{0.0, 0}};
  for (int n = 2; n <= max_n; ++n) {
    const double r = std::log(static_cast<double>(n)) / (4.0 * pi);
    lam.push_back({r, 0});
    lam.push_back({-r, 0});
  }
  std::vector<Node> mu;
  for (double g : zeros) {
    mu.push_back({g, 0});
    mu.push_back({-g, 0});
  }
  InterpolationScheme s;
  s.name = "zeta";
  s.lambda = NodeSet(std::move(lam), std::log(static_cast<double>(max_n)) / (4.0 * pi));
  s.m = NodeSet(std::move(mu), zeros.empty() ? std::numeric_limits<double>::infinity() : zeros.back());
  s.L = 2.0;
  s.U = 0.0;
  return s;
}

std::vector<double> read_zeros(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      std::ostringstream msg;
      msg << "line " << lineno << ": not a decimal number: '" << s << "'";
      throw InputError(msg.str());
    }
    if (!(v > 0.0)) {
      std::ostringstream msg;
      msg << "line " << lineno << ": ordinate must be positive";
      throw InputError(msg.str());
    }
    if (!out.empty() && v < out.back()) {
      std::ostringstream msg;
      msg << "line " << lineno << ": ordinates must be ascending";
      throw InputError(msg.str());
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("file not found: " + path.string());
  return read_zeros(in);
}

std::size_t zeta_count(std::span<const double> zeros, double T) {
  return static_cast<std::size_t>(std::lower_bound(zeros.begin(), zeros.end(), T) - zeros.begin());
}

Eigen::VectorXd grid_points(Range r, double step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (!(r.hi >= r.lo)) throw DomainError("range must satisfy lo <= hi");
  const auto n = static_cast<Eigen::Index>(std::floor((r.hi - r.lo) / step + 1e-9)) + 1;
  Eigen::VectorXd g(n);
  for (Eigen::Index i = 0; i < n; ++i) g[i] = r.lo + static_cast<double>(i) * step;
  return g;
}

BoundAudit audit_bound(const InterpolationScheme& s, Range R1, Range R2, double step, double eps) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (!(R1.lo >= 1.0) || !(R2.lo >= 1.0)) throw DomainError("radii must be at least 1");
  if (R1.hi > s.lambda.extent() * (1 + 1e-12))
    throw ExtentError("R1 range exceeds the generated Lambda nodes (extent " + std::to_string(s.lambda.extent()) + ")");
  if (R2.hi > s.m.extent() * (1 + 1e-12))
    throw ExtentError("R2 range exceeds the generated M nodes (extent " + std::to_string(s.m.extent()) + ")");

  BoundAudit a;
  a.eps = eps;
  a.R1 = grid_points(R1, step);
  a.R2 = grid_points(R2, step);
  Eigen::VectorXd n2(a.R2.size());
  for (Eigen::Index j = 0; j < a.R2.size(); ++j) n2[j] = static_cast<double>(counting_function(s.m, a.R2[j]));

  a.slack.resize(a.R1.size(), a.R2.size());
  Eigen::VectorXd row_C(a.R1.size());
  parallel_for(0, static_cast<std::size_t>(a.R1.size()), [&](std::size_t ii) {
    const auto i = static_cast<Eigen::Index>(ii);
    const double r1 = a.R1[i];
    const double n1 = static_cast<double>(counting_function(s.lambda, r1));
    double c = 0.0;
    for (Eigen::Index j = 0; j < a.R2.size(); ++j) {
      const double area = 4.0 * r1 * a.R2[j];
      const double v = n1 + n2[j] - area;
      a.slack(i, j) = v;
      if (v < 0.0) c = std::max(c, -v / std::pow(std::log(area), 2.0 + eps));
    }
    row_C[i] = c;
  });
  a.fitted_C = row_C.maxCoeff();
  Eigen::Index bi = 0, bj = 0;
  a.min_slack = a.slack.minCoeff(&bi, &bj);
  a.min_R1 = a.R1[bi];
  a.min_R2 = a.R2[bj];
  return a;
}

ZetaCheck riemann_von_mangoldt_check(std::span<const double> zeros, double T_min, double T_max, double eps, double C) {
  if (!(T_min > 1.0) || !(T_max >= T_min)) throw DomainError("need 1 < T_min <= T_max");
  if (!(eps > 0.0) || !(C >= 0.0)) throw DomainError("need eps > 0 and C >= 0");
  if (zeros.empty() || T_max > zeros.back()) throw ExtentError("T range exceeds the tabulated zeros");

  ZetaCheck z;
  z.C = C;
  z.eps = eps;
  auto evaluate = [&](double T, std::size_t count) {
    const double L = std::pow(std::log(T), 2.0 + eps);
    const double main = T / (2.0 * pi) * std::log(T / (2.0 * pi * std::numbers::e));
    ZetaMargin m{T, count, main - C * L, 0.0};
    m.margin = static_cast<double>(count) - m.rhs;
    z.minimal_C = std::max(z.minimal_C, (main - static_cast<double>(count)) / L);
    z.table.push_back(m);
  };

  evaluate(T_min, zeta_count(zeros, T_min));
  for (double g : zeros) {
    if (g <= T_min) continue;
    if (g > T_max) break;
    evaluate(g, zeta_count(zeros, g));  // left limit: g itself not yet counted
  }
  if (T_max > T_min) evaluate(T_max, zeta_count(zeros, T_max));

  z.worst = *std::min_element(z.table.begin(), z.table.end(),
                              [](const ZetaMargin& a, const ZetaMargin& b) { return a.margin < b.margin; });
  z.pass = z.worst.margin >= 0.0;
  return z;
}

}  // namespace tfloc
