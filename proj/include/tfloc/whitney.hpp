#pragma once

#include <cstddef>
#include <vector>

namespace tfloc {

struct Piece {
  double left = 0.0;
  double length = 0.0;
  bool terminal = false;  // touches an endpoint of the interval

  double right() const { return left + length; }
};

/// Partition of I = [-D/2, D/2] into pieces ordered left to right.
class WhitneyDecomposition {
 public:
  /// Validates that the pieces tile [-D/2, D/2] without gaps or overlaps.
  static WhitneyDecomposition from_pieces(double D, std::vector<Piece> pieces);

  double length() const { return D_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  const Piece& operator[](std::size_t j) const { return pieces_[j]; }

  /// J' = { j : delta_j >= 1 }.
  std::vector<std::size_t> large_indices() const;
  bool in_large(std::size_t j) const { return pieces_[j].length >= 1.0; }
  /// Sum of delta_j over J'.
  double large_mass() const;

  /// Distance of piece j to the boundary of I.
  double boundary_distance(std::size_t j) const;

  /// Comparability delta_j / 2 <= dist(I_j, dI) <= 4 delta_j for every
  /// non-terminal piece. The central piece of the dyadic scheme sits exactly
  /// at the lower end (dist = delta / 2); every tail piece has dist = delta.
  bool comparable() const;

 private:
  WhitneyDecomposition(double D, std::vector<Piece> pieces) : D_(D), pieces_(std::move(pieces)) {}

  double D_;
  std::vector<Piece> pieces_;
};

/// Symmetric dyadic decomposition: central half, tails of length D/8, D/16, ...
/// while the length stays >= 1, and one terminal piece absorbing the rest.
/// Throws DomainError for D < 2.
WhitneyDecomposition whitney_decompose(double D);

struct AdmissibleEntry {
  std::size_t piece;
  int k;
};

/// S = { (j, k) : j in J', 0 <= k < delta_j - threshold }.
struct AdmissibleSet {
  std::vector<AdmissibleEntry> entries;
  double D = 0.0;
  double C = 0.0;
  double eps = 0.0;
  double threshold = 0.0;  // C log^{1+eps}(D)

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  /// C' = (D - |S|) / log^{2+eps}(D), the constant the run actually needs.
  double deficit_constant() const;
};

/// C log^{1+eps}(D), natural logarithm.
double admissible_threshold(double D, double C, double eps);

AdmissibleSet admissible_set(const WhitneyDecomposition& w, double C, double eps);

/// Same selection rule with an explicit threshold in place of C log^{1+eps}(D).
AdmissibleSet admissible_set_with_threshold(const WhitneyDecomposition& w, double threshold);

}  // namespace tfloc
