#include "tfloc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfloc/errors.hpp"
#include "tfloc/fit.hpp"
#include "tfloc/lcbasis.hpp"
#include "tfloc/localization.hpp"
#include "tfloc/parallel.hpp"
#include "tfloc/schemes.hpp"
#include "tfloc/whitney.hpp"
#include "tfloc/windows.hpp"
#include "tfloc/witness.hpp"

namespace tfloc::cli {
namespace {

using Value = std::variant<double, long long, bool, std::string>;
using json = nlohmann::ordered_json;

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_text(const Value& v) {
  struct {
    std::string operator()(double x) const { return fmt12(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& x) const { return x; }
  } visit;
  return std::visit(visit, v);
}

json to_json(const Value& v) {
  struct {
    json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return std::strtod(fmt12(x).c_str(), nullptr);
    }
    json operator()(long long x) const { return x; }
    json operator()(bool x) const { return x; }
    json operator()(const std::string& x) const { return x; }
  } visit;
  return std::visit(visit, v);
}

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Value>> config;
  std::vector<std::pair<std::string, Value>> summary;
  std::vector<Table> tables;
  int status = kExitOk;

  void set(const std::string& key, Value v) { summary.emplace_back(key, std::move(v)); }
  void fail_if(bool failed) {
    if (failed) status = kExitCheckFailed;
  }
};

void write_csv(const Report& r, std::ostream& out) {
  out << "# tfloc " << r.command << '\n';
  for (const auto& [k, v] : r.config) out << "# config " << k << '=' << to_text(v) << '\n';
  for (const auto& [k, v] : r.summary) out << "# " << k << ": " << to_text(v) << '\n';
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) out << '\n';
    first = false;
    if (r.tables.size() > 1) out << "# table " << t.name << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << to_text(row[i]);
      out << '\n';
    }
  }
}

void write_json(const Report& r, std::ostream& out) {
  json j;
  j["command"] = r.command;
  json& config = j["config"] = json::object();
  for (const auto& [k, v] : r.config) config[k] = to_json(v);
  json& summary = j["summary"] = json::object();
  for (const auto& [k, v] : r.summary) summary[k] = to_json(v);
  json& tables = j["tables"] = json::object();
  for (const auto& t : r.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json jr = json::array();
      for (const auto& v : row) jr.push_back(to_json(v));
      rows.push_back(std::move(jr));
    }
    tables[t.name] = {{"columns", t.columns}, {"rows", std::move(rows)}};
  }
  j["status"] = r.status == kExitOk ? "pass" : "fail";
  out << j.dump(2) << '\n';
}

long long as_int(std::size_t n) { return static_cast<long long>(n); }
long long as_int(Eigen::Index n) { return static_cast<long long>(n); }

struct Global {
  bool json = false;
  std::string output;
  std::optional<std::size_t> threads;
  std::uint64_t seed = 1;
  std::optional<long long> intervals;

  Eigen::Index grid(Eigen::Index fallback) const {
    if (!intervals) return fallback;
    if (*intervals < 16) throw InputError("--intervals must be at least 16");
    return static_cast<Eigen::Index>(*intervals);
  }
};

// Schemes shared by witness and bound.
struct SchemeArgs {
  std::string scheme = "rv";
  std::string zeros_file;
  std::optional<long long> max_n;
};

constexpr double kZetaMaxN = 2e6;

InterpolationScheme build_scheme(const SchemeArgs& a, double R1_needed, double R2_needed, Report& rep) {
  rep.config.emplace_back("scheme", a.scheme);
  if (a.scheme == "rv") {
    const double r = std::max(R1_needed, R2_needed);
    const long long n = a.max_n ? *a.max_n : static_cast<long long>(std::ceil(r * r)) + 1;
    if (n < 1 || n > 100000000) throw InputError("--max-n must lie in [1, 1e8]");
    rep.config.emplace_back("max_n", n);
    return rv_scheme(static_cast<int>(n), false);
  }
  if (a.zeros_file.empty()) throw InputError("--zeros-file is required for the zeta scheme");
  const auto zeros = load_zeros(a.zeros_file);
  long long n;
  if (a.max_n) {
    n = *a.max_n;
  } else {
    const double needed = std::ceil(std::exp(4.0 * std::numbers::pi * R1_needed));
    if (needed > kZetaMaxN)
      throw ExtentError("R1 = " + fmt12(R1_needed) + " needs about " + fmt12(needed) +
                        " log(n)/(4 pi) nodes; the zeta scheme is capped at max_n = 2e6 (R1 <= 1.154)");
    n = static_cast<long long>(needed);
  }
  if (n < 1 || n > static_cast<long long>(kZetaMaxN)) throw InputError("--max-n must lie in [1, 2e6]");
  rep.config.emplace_back("zeros_file", a.zeros_file);
  rep.config.emplace_back("max_n", n);
  return zeta_scheme(zeros, static_cast<int>(n));
}

void add_scheme_options(CLI::App* sub, SchemeArgs& a, bool required_default) {
  sub->add_option("--scheme", a.scheme, "node scheme")->check(CLI::IsMember({"rv", "zeta"}))->required(required_default);
  sub->add_option("--zeros-file", a.zeros_file, "zeta ordinates, one per line");
  sub->add_option("--max-n", a.max_n, "largest n used by the node generator");
}

// whitney ---------------------------------------------------------------

struct WhitneyArgs {
  double D = 0.0;
  double C = 1.0;
  double eps = 0.1;
};

Report run_whitney(const WhitneyArgs& a) {
  Report r;
  r.command = "whitney";
  r.config = {{"D", a.D}, {"C", a.C}, {"eps", a.eps}};
  const auto w = whitney_decompose(a.D);
  const auto s = admissible_set(w, a.C, a.eps);
  Table t{"pieces", {"left", "length", "in_Jprime"}, {}};
  for (std::size_t j = 0; j < w.size(); ++j)
    t.rows.push_back({w[j].left, w[j].length, static_cast<long long>(w.in_large(j))});
  r.tables.push_back(std::move(t));
  r.set("pieces", as_int(w.size()));
  r.set("Jprime_size", as_int(w.large_indices().size()));
  r.set("Jprime_mass", w.large_mass());
  r.set("threshold", s.threshold);
  r.set("S_size", as_int(s.size()));
  r.set("deficit_constant", s.D > 1.0 ? s.deficit_constant() : 0.0);
  r.set("comparable", w.comparable());
  r.fail_if(!w.comparable() || w.large_mass() < a.D - 4.0);
  return r;
}

// bells -----------------------------------------------------------------

struct BellsArgs {
  double D = 0.0;
  double eta = 0.0;
  long long samples = 1001;
};

Report run_bells(const BellsArgs& a) {
  Report r;
  r.command = "bells";
  r.config = {{"D", a.D}, {"eta", a.eta}, {"samples", a.samples}};
  if (a.samples < 2) throw InputError("--samples must be at least 2");
  if (!(a.eta > 0.0 && a.eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  const auto w = whitney_decompose(a.D);
  const auto bells = build_bells(w, a.eta);
  Table t{"bells", {"x"}, {}};
  for (std::size_t j = 0; j < bells.size(); ++j) t.columns.push_back("b" + std::to_string(j));
  t.columns.push_back("energy");

  // Partition of energy is exact away from the two boundary ramps.
  const double inner_lo = bells.front().core_left();
  const double inner_hi = bells.back().core_right();
  double defect = 0.0;
  for (long long i = 0; i < a.samples; ++i) {
    const double x = -a.D / 2 + a.D * static_cast<double>(i) / static_cast<double>(a.samples - 1);
    std::vector<Value> row{x};
    double e = 0.0;
    for (const auto& b : bells) {
      const double v = bell_value(b, x);
      e += v * v;
      row.emplace_back(v);
    }
    row.emplace_back(e);
    if (x >= inner_lo && x <= inner_hi) defect = std::max(defect, std::abs(e - 1.0));
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  r.set("bells", as_int(bells.size()));
  r.set("energy_interior_lo", inner_lo);
  r.set("energy_interior_hi", inner_hi);
  r.set("energy_defect", defect);
  r.fail_if(defect > 1e-9);
  return r;
}

// basis check -----------------------------------------------------------

struct BasisArgs {
  double D = 32.0;
  double eta = 0.5;
  long long count = 50;
  double xi_max = 4.0;
};

Report run_basis_check(const BasisArgs& a, const Global& g) {
  Report r;
  r.command = "basis check";
  const Eigen::Index grid = g.grid(kDefaultIntervals);
  r.config = {{"D", a.D}, {"eta", a.eta}, {"count", a.count}, {"xi_max", a.xi_max}, {"intervals", as_int(grid)}};
  if (a.count < 1) throw InputError("--count must be positive");
  const auto bells = build_bells(whitney_decompose(a.D), a.eta);
  auto atoms = basis_atoms(bells, a.xi_max);
  if (atoms.size() > static_cast<std::size_t>(a.count)) atoms.resize(static_cast<std::size_t>(a.count));

  std::vector<double> planch(atoms.size());
  parallel_for(0, atoms.size(), [&](std::size_t i) { planch[i] = plancherel_defect(atoms[i]); });
  const Eigen::MatrixXd G = gram_matrix(atoms, grid);

  Table t{"atoms", {"j", "k", "delta", "alpha", "xi", "norm_defect", "plancherel_defect"}, {}};
  double worst_p = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto& at = atoms[i];
    const auto ii = static_cast<Eigen::Index>(i);
    t.rows.push_back({as_int(at.piece), static_cast<long long>(at.k), at.delta, at.alpha, at.xi,
                      std::abs(G(ii, ii) - 1.0), planch[i]});
    worst_p = std::max(worst_p, planch[i]);
  }
  const double gram_dev =
      atoms.empty() ? 0.0 : (G - Eigen::MatrixXd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
  r.tables.push_back(std::move(t));
  r.set("atoms", as_int(atoms.size()));
  r.set("gram_deviation", gram_dev);
  r.set("plancherel_max", worst_p);
  r.fail_if(gram_dev > 1e-6 || worst_p > 1e-5);
  return r;
}

// decay fit -------------------------------------------------------------

struct DecayArgs {
  long long j = 0;
  long long k = 0;
  int n = 0;
  double xi_max = 0.0;
  double D = 32.0;
  double eta = 0.5;
  long long samples = 2000;
};

Report run_decay_fit(const DecayArgs& a, const Global& g) {
  Report r;
  r.command = "decay fit";
  const Eigen::Index grid = g.grid(Eigen::Index(1) << 14);
  r.config = {{"D", a.D},           {"eta", a.eta}, {"j", a.j},       {"k", a.k},
              {"n", static_cast<long long>(a.n)}, {"xi_max", a.xi_max}, {"samples", a.samples},
              {"intervals", as_int(grid)}};
  if (a.samples < 8) throw InputError("--samples must be at least 8");
  if (a.k < 0) throw InputError("--k must be nonnegative");
  if (a.n < 0 || a.n > kMaxTransformOrder) throw UnsupportedOrder("--n must lie in [0, 8]");
  const auto bells = build_bells(whitney_decompose(a.D), a.eta);
  if (a.j < 0 || static_cast<std::size_t>(a.j) >= bells.size())
    throw InputError("--j must index a piece in [0, " + std::to_string(bells.size() - 1) + "]");
  const auto atom = make_atom(bells[static_cast<std::size_t>(a.j)], static_cast<int>(a.k));
  const double umax = atom.delta * (a.xi_max - atom.xi);
  if (!(umax > 1.0)) throw InputError("--xi-max must exceed the atom center by more than 1/delta");

  // Log-spaced offsets above the center: the fit variable is u = delta |xi - xi0|.
  Eigen::VectorXd xi(a.samples);
  for (Eigen::Index i = 0; i < xi.size(); ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(xi.size() - 1);
    xi[i] = atom.xi + std::pow(umax, t) / atom.delta;
  }
  const auto c = concentration_check(atom, xi, a.n, grid);
  const double target = 1.0 - a.eta;
  Table t{"fit",
          {"j", "k", "n", "delta", "xi0", "A", "rate", "exponent", "free_A", "free_rate", "free_exponent",
           "worst_ratio"},
          {}};
  t.rows.push_back({a.j, a.k, static_cast<long long>(a.n), atom.delta, atom.xi, c.bound.A, c.bound.rate,
                    c.bound.exponent, c.free.A, c.free.rate, c.free.exponent, c.worst_ratio});
  r.tables.push_back(std::move(t));
  r.set("target_exponent", target);
  r.set("exponent_relative_error", std::abs(c.free.exponent - target) / target);
  r.set("envelope_points", as_int(c.bound.points));
  return r;
}

// prolate ---------------------------------------------------------------

struct ProlateArgs {
  double W = 0.0;
  double T = 0.0;
  std::optional<long long> N;
};

Report run_prolate(const ProlateArgs& a) {
  Report r;
  r.command = "prolate";
  if (!(a.W > 0.0) || !(a.T > 0.0)) throw DomainError("W and T must be positive");
  const Eigen::Index N = a.N ? static_cast<Eigen::Index>(*a.N) : minimum_grid(a.W, a.T);
  r.config = {{"W", a.W}, {"T", a.T}, {"N", as_int(N)}};
  const auto s = localization_spectrum(a.W, a.T, N);
  const double wt = s.time_bandwidth();
  Table t{"eigenvalues", {"index", "eigenvalue"}, {}};
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) t.rows.push_back({as_int(i), s.eigenvalues[i]});
  r.tables.push_back(std::move(t));
  r.set("time_bandwidth", wt);
  r.set("trace", s.trace());
  r.set("count_half", as_int(s.count_half));
  r.set("plunge_width", as_int(s.count_plunge));
  const bool count_ok = std::abs(static_cast<double>(s.count_half) - wt) <= 2.0;
  const bool trace_ok = std::abs(s.trace() - wt) <= 1e-3 * std::max(1.0, wt);
  r.set("count_ok", count_ok);
  r.set("trace_ok", trace_ok);
  r.fail_if(!count_ok || !trace_ok);
  return r;
}

// witness ---------------------------------------------------------------

struct WitnessArgs {
  SchemeArgs scheme;
  double R1 = 0.0;
  double R2 = 0.0;
  double C = 0.1;
  double eps = 0.1;
  double thin = 0.0;
  std::string parity = "none";
};

Report run_witness(const WitnessArgs& a, const Global& g) {
  Report r;
  r.command = "witness";
  const Eigen::Index grid = g.grid(kDefaultIntervals);
  WitnessProblem p;
  p.R1 = a.R1;
  p.R2 = a.R2;
  p.C = a.C;
  p.eps = a.eps;
  p.parity = a.parity == "even" ? Parity::even : a.parity == "odd" ? Parity::odd : Parity::none;
  p.validate();
  // Nodes up to 4 R2 feed the tail report.
  p.scheme = build_scheme(a.scheme, a.R1, 4.0 * a.R2, r);
  r.config.insert(r.config.end(), {{"R1", a.R1},
                                   {"R2", a.R2},
                                   {"C", a.C},
                                   {"eps", a.eps},
                                   {"thin", a.thin},
                                   {"parity", a.parity},
                                   {"seed", static_cast<long long>(g.seed)},
                                   {"intervals", as_int(grid)}});

  WitnessOptions opt;
  opt.thin = a.thin;
  opt.seed = g.seed;
  opt.intervals = grid;
  const auto res = solve_witness(p, opt);
  const auto s = admissible_set(whitney_decompose(p.D()), p.C, p.eps);

  r.set("D", res.D);
  r.set("S_size", as_int(res.admissible_size));
  r.set("constraints", as_int(res.constraints.size()));
  r.set("null_dim", as_int(res.null_dim));
  r.set("sigma_min", res.sigma_min);
  r.set("sigma_max", res.sigma_max);
  r.set("residual", res.residual);
  r.set("sup_x", res.sup_cert.x);
  r.set("sup_value", res.sup_cert.value);
  r.set("sup_floor", res.sup_floor);
  r.set("l2_norm", res.l2_norm);
  r.set("expected_l2", res.expected_l2);
  r.set("support_leak", res.support_leak);

  Table coeffs{"coefficients", {"j", "k", "a"}, {}};
  for (std::size_t i = 0; i < s.entries.size() && i < static_cast<std::size_t>(res.coefficients.size()); ++i)
    coeffs.rows.push_back({as_int(s.entries[i].piece), static_cast<long long>(s.entries[i].k),
                           res.coefficients[static_cast<Eigen::Index>(i)]});
  r.tables.push_back(std::move(coeffs));

  if (res.null_dim >= 1) {
    const auto tail = tail_certificate(res, p);
    Table tt{"tail", {"order", "max_abs_transform"}, {}};
    for (std::size_t k = 0; k < tail.max_per_order.size(); ++k) tt.rows.push_back({as_int(k), tail.max_per_order[k]});
    r.tables.push_back(std::move(tt));
    r.set("tail_weighted_sum", tail.weighted_tail_sum);
    r.set("tail_nodes", as_int(tail.tail_nodes));
    const bool ok = res.residual < 1e-8 && res.sup_cert.value >= res.sup_floor - 1e-3 && res.support_leak <= 1e-12 &&
                    std::abs(res.l2_norm - res.expected_l2) <= 1e-6;
    r.set("certificates_ok", ok);
    r.fail_if(!ok);
  } else {
    r.set("obstruction", res.admissible_size > 0);
  }
  return r;
}

// bound -----------------------------------------------------------------

struct BoundArgs {
  SchemeArgs scheme;
  double R1_min = 1.0;
  double R2_min = 1.0;
  double R1_max = 0.0;
  double R2_max = 0.0;
  double step = 0.0;
  double eps = 0.0;
  std::optional<double> C;
  bool no_surface = false;
};

Report run_bound(const BoundArgs& a) {
  Report r;
  r.command = "bound";
  if (!(a.step > 0.0)) throw InputError("--step must be positive");
  const auto s = build_scheme(a.scheme, a.R1_max, a.R2_max, r);
  r.config.insert(r.config.end(), {{"R1_min", a.R1_min},
                                   {"R1_max", a.R1_max},
                                   {"R2_min", a.R2_min},
                                   {"R2_max", a.R2_max},
                                   {"step", a.step},
                                   {"eps", a.eps}});
  if (a.C) r.config.emplace_back("C", *a.C);
  const auto audit = audit_bound(s, {a.R1_min, a.R1_max}, {a.R2_min, a.R2_max}, a.step, a.eps);
  if (!a.no_surface) {
    Table t{"slack", {"R1", "R2", "slack"}, {}};
    t.rows.reserve(static_cast<std::size_t>(audit.slack.size()));
    for (Eigen::Index i = 0; i < audit.R1.size(); ++i)
      for (Eigen::Index j = 0; j < audit.R2.size(); ++j) t.rows.push_back({audit.R1[i], audit.R2[j], audit.slack(i, j)});
    r.tables.push_back(std::move(t));
  }
  r.set("cells", as_int(audit.slack.size()));
  r.set("min_slack", audit.min_slack);
  r.set("min_R1", audit.min_R1);
  r.set("min_R2", audit.min_R2);
  r.set("fitted_C", audit.fitted_C);
  if (a.C) {
    r.set("bound_holds", audit.fitted_C <= *a.C);
    r.fail_if(audit.fitted_C > *a.C);
  }
  return r;
}

// zeta ------------------------------------------------------------------

struct ZetaArgs {
  std::string zeros_file;
  double T_min = 2.0;
  double T_max = 0.0;
  double eps = 0.1;
  double C = 10.0;
};

Report run_zeta(const ZetaArgs& a) {
  Report r;
  r.command = "zeta";
  r.config = {{"zeros_file", a.zeros_file}, {"T_min", a.T_min}, {"T_max", a.T_max}, {"eps", a.eps}, {"C", a.C}};
  const auto zeros = load_zeros(a.zeros_file);
  const auto check = riemann_von_mangoldt_check(zeros, a.T_min, a.T_max, a.eps, a.C);
  Table t{"margins", {"T", "count", "rhs", "margin"}, {}};
  for (const auto& m : check.table) t.rows.push_back({m.T, as_int(m.count), m.rhs, m.margin});
  r.tables.push_back(std::move(t));
  r.set("zeros", as_int(zeros.size()));
  r.set("N_T_max", as_int(zeta_count(zeros, a.T_max)));
  r.set("worst_T", check.worst.T);
  r.set("worst_margin", check.worst.margin);
  r.set("minimal_C", check.minimal_C);
  r.set("pass", check.pass);
  r.fail_if(!check.pass);
  return r;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-frequency localization and Fourier interpolation toolkit", "tfloc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  Global g;
  app.add_flag("--json", g.json, "emit JSON instead of CSV");
  app.add_option("--output,-o", g.output, "write the report to a file");
  app.add_option("--threads", g.threads, "worker cap (default: TFLOC_THREADS or hardware)")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--intervals", g.intervals, "quadrature grid intervals");

  WhitneyArgs wa;
  auto* whitney = app.add_subcommand("whitney", "Whitney decomposition and admissible set");
  whitney->add_option("--D", wa.D)->required();
  whitney->add_option("--C", wa.C);
  whitney->add_option("--eps", wa.eps);

  BellsArgs ba;
  auto* bells = app.add_subcommand("bells", "sampled bell windows");
  bells->add_option("--D", ba.D)->required();
  bells->add_option("--eta", ba.eta)->required();
  bells->add_option("--samples", ba.samples);

  BasisArgs bc;
  auto* basis = app.add_subcommand("basis", "local cosine basis checks");
  basis->require_subcommand(1);
  auto* basis_check = basis->add_subcommand("check", "Gram matrix and Plancherel checks");
  basis_check->add_option("--D", bc.D);
  basis_check->add_option("--eta", bc.eta);
  basis_check->add_option("--count", bc.count);
  basis_check->add_option("--xi-max", bc.xi_max);

  DecayArgs da;
  auto* decay = app.add_subcommand("decay", "Fourier decay of atoms");
  decay->require_subcommand(1);
  auto* decay_fit = decay->add_subcommand("fit", "fit the concentration envelope of one atom");
  decay_fit->add_option("--j", da.j)->required();
  decay_fit->add_option("--k", da.k)->required();
  decay_fit->add_option("--n", da.n);
  decay_fit->add_option("--xi-max", da.xi_max)->required();
  decay_fit->add_option("--D", da.D);
  decay_fit->add_option("--eta", da.eta);
  decay_fit->add_option("--samples", da.samples);

  ProlateArgs pa;
  auto* prolate = app.add_subcommand("prolate", "time-frequency localization spectrum");
  prolate->add_option("--W", pa.W)->required();
  prolate->add_option("--T", pa.T)->required();
  prolate->add_option("--N", pa.N);

  WitnessArgs xa;
  auto* witness = app.add_subcommand("witness", "witness function for an interpolation scheme");
  add_scheme_options(witness, xa.scheme, true);
  witness->add_option("--R1", xa.R1)->required();
  witness->add_option("--R2", xa.R2)->required();
  witness->add_option("--C", xa.C);
  witness->add_option("--eps", xa.eps);
  witness->add_option("--thin", xa.thin);
  witness->add_option("--parity", xa.parity)->check(CLI::IsMember({"none", "even", "odd"}));

  BoundArgs bo;
  auto* bound = app.add_subcommand("bound", "counting bound audit on a radius grid");
  add_scheme_options(bound, bo.scheme, true);
  bound->add_option("--R1-min", bo.R1_min);
  bound->add_option("--R2-min", bo.R2_min);
  bound->add_option("--R1-max", bo.R1_max)->required();
  bound->add_option("--R2-max", bo.R2_max)->required();
  bound->add_option("--step", bo.step)->required();
  bound->add_option("--eps", bo.eps)->required();
  bound->add_option("--C", bo.C, "fail when the fitted C exceeds this");
  bound->add_flag("--no-surface", bo.no_surface, "summary only");

  ZetaArgs za;
  auto* zeta = app.add_subcommand("zeta", "Riemann-von Mangoldt lower bound check");
  zeta->add_option("--zeros-file", za.zeros_file)->required();
  zeta->add_option("--T-min", za.T_min);
  zeta->add_option("--T-max", za.T_max)->required();
  zeta->add_option("--eps", za.eps);
  zeta->add_option("--C", za.C);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (g.threads) set_thread_count(*g.threads);
    Report rep;
    if (whitney->parsed()) rep = run_whitney(wa);
    else if (bells->parsed()) rep = run_bells(ba);
    else if (basis_check->parsed()) rep = run_basis_check(bc, g);
    else if (decay_fit->parsed()) rep = run_decay_fit(da, g);
    else if (prolate->parsed()) rep = run_prolate(pa);
    else if (witness->parsed()) rep = run_witness(xa, g);
    else if (bound->parsed()) rep = run_bound(bo);
    else rep = run_zeta(za);

    std::ostringstream buf;
    if (g.json) write_json(rep, buf);
    else write_csv(rep, buf);
    if (g.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(g.output, std::ios::binary);
      if (!f) throw InputError("cannot open output file: " + g.output);
      f << buf.str();
    }
    if (rep.status != kExitOk) err << "check failed\n";
    return rep.status;
  } catch (const DecayViolation& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace tfloc::cli
