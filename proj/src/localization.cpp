#include "tfloc/localization.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include <Eigen/Eigenvalues>

#include "tfloc/errors.hpp"
#include "tfloc/parallel.hpp"

namespace tfloc {

Eigen::Index minimum_grid(double W, double T) {
  const auto n = static_cast<Eigen::Index>(std::ceil(64.0 * (4.0 * W * T + 16.0)));
  return n + (n % 2);
}

LocalizationSpectrum localization_spectrum(double W, double T, Eigen::Index N) {
  if (!(W > 0.0) || !(T > 0.0)) throw DomainError("W and T must be positive");
  if (N < minimum_grid(W, T)) throw ResolutionError("grid too coarse: need N >= 64 (4WT + 16)");
  if (N % 2 != 0) throw ResolutionError("grid size must be even");

  const Eigen::VectorXd row = sinc_kernel_row(W, T, N);
  const Eigen::Index half = N / 2;
  // Midpoints i and N-1-i are mirror images. On the right half the even block
  // is K(x_i, x_j) + K(x_i, -x_j) and the odd block the difference; in Toeplitz
  // terms those are row[|i - j|] +- row[i + j + 1].
  std::array<Eigen::VectorXd, 2> parts;
  parallel_for(0, 2, [&](std::size_t p) {
    const double sign = p == 0 ? 1.0 : -1.0;
    Eigen::MatrixXd B(half, half);
    for (Eigen::Index j = 0; j < half; ++j)
      for (Eigen::Index i = 0; i < half; ++i) B(i, j) = row[i > j ? i - j : j - i] + sign * row[i + j + 1];
    // The spectrum clusters at zero, where the QR sweep can stall; the unit
    // shift moves that cluster away from the deflation threshold.
    B.diagonal().array() += 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ResolutionError("eigenvalue iteration did not converge");
    parts[p] = es.eigenvalues().array() - 1.0;
  });

  LocalizationSpectrum s;
  s.W = W;
  s.T = T;
  s.N = N;
  s.eigenvalues.resize(N);
  s.eigenvalues << parts[0], parts[1];
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  s.count_half = (s.eigenvalues.array() >= 0.5).count();
  s.count_plunge = plunge_width(s);
  return s;
}

Eigen::Index plunge_width(const LocalizationSpectrum& s) {
  return (s.eigenvalues.array() > 0.01 && s.eigenvalues.array() < 0.99).count();
}

}  // namespace tfloc
