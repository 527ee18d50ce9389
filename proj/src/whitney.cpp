#include "tfloc/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tfloc/errors.hpp"

namespace tfloc {

WhitneyDecomposition WhitneyDecomposition::from_pieces(double D, std::vector<Piece> pieces) {
  if (!(D > 0.0)) throw DomainError("interval length must be positive");
  if (pieces.empty()) throw DomainError("decomposition needs at least one piece");
  const double tol = 1e-12 * std::max(1.0, D);
  double cursor = -D / 2;
  for (auto& p : pieces) {
    if (!(p.length > 0.0)) throw DomainError("piece lengths must be positive");
    if (std::abs(p.left - cursor) > tol) {
      std::ostringstream msg;
      msg << "pieces do not tile the interval near x = " << cursor;
      throw DomainError(msg.str());
    }
    cursor = p.right();
  }
  if (std::abs(cursor - D / 2) > tol) throw DomainError("pieces do not reach D/2");
  pieces.front().terminal = true;
  pieces.back().terminal = true;
  return WhitneyDecomposition(D, std::move(pieces));
}

std::vector<std::size_t> WhitneyDecomposition::large_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < pieces_.size(); ++j)
    if (in_large(j)) out.push_back(j);
  return out;
}

double WhitneyDecomposition::large_mass() const {
  double s = 0.0;
  for (std::size_t j = 0; j < pieces_.size(); ++j)
    if (in_large(j)) s += pieces_[j].length;
  return s;
}

double WhitneyDecomposition::boundary_distance(std::size_t j) const {
  const auto& p = pieces_[j];
  return std::min(p.left + D_ / 2, D_ / 2 - p.right());
}

bool WhitneyDecomposition::comparable() const {
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    if (pieces_[j].terminal) continue;
    const double d = boundary_distance(j);
    const double len = pieces_[j].length;
    if (d < 0.5 * len * (1 - 1e-12) || d > 4.0 * len * (1 + 1e-12)) return false;
  }
  return true;
}

WhitneyDecomposition whitney_decompose(double D) {
  if (!(D >= 2.0)) throw DomainError("Whitney decomposition requires D >= 2");

  // Right half; lengths are D / 2^m so every endpoint is exact in binary.
  std::vector<Piece> right;
  double cursor = D / 4;
  for (double len = D / 8; len >= 1.0; len /= 2) {
    right.push_back({cursor, len, false});
    cursor += len;
  }
  right.push_back({cursor, D / 2 - cursor, true});

  std::vector<Piece> pieces;
  pieces.reserve(2 * right.size() + 1);
  for (auto it = right.rbegin(); it != right.rend(); ++it) pieces.push_back({-it->right(), it->length, it->terminal});
  pieces.push_back({-D / 4, D / 2, false});
  pieces.insert(pieces.end(), right.begin(), right.end());
  return WhitneyDecomposition::from_pieces(D, std::move(pieces));
}

double admissible_threshold(double D, double C, double eps) { return C * std::pow(std::log(D), 1.0 + eps); }

double AdmissibleSet::deficit_constant() const {
  return (D - static_cast<double>(entries.size())) / std::pow(std::log(D), 2.0 + eps);
}

AdmissibleSet admissible_set_with_threshold(const WhitneyDecomposition& w, double threshold) {
  AdmissibleSet s;
  s.D = w.length();
  s.threshold = threshold;
  for (std::size_t j : w.large_indices()) {
    const double bound = w[j].length - threshold;
    // k ranges over integers with k < bound.
    for (int k = 0; k < bound; ++k) s.entries.push_back({j, k});
  }
  return s;
}

AdmissibleSet admissible_set(const WhitneyDecomposition& w, double C, double eps) {
  if (!(C > 0.0) || !(eps > 0.0)) throw DomainError("admissible set needs C > 0 and eps > 0");
  auto s = admissible_set_with_threshold(w, admissible_threshold(w.length(), C, eps));
  s.C = C;
  s.eps = eps;
  return s;
}

}  // namespace tfloc
