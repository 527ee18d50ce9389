#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>

namespace tfloc {

/// Spectrum of the time-frequency localization operator for [-T, T] x [-W, W].
struct LocalizationSpectrum {
  double W = 0.0;
  double T = 0.0;
  Eigen::Index N = 0;
  Eigen::VectorXd eigenvalues;  // descending
  Eigen::Index count_half = 0;    // #{lambda >= 1/2}
  Eigen::Index count_plunge = 0;  // #{lambda in (0.01, 0.99)}

  double trace() const { return eigenvalues.sum(); }
  double time_bandwidth() const { return 4.0 * W * T; }
};

/// Smallest admissible grid, 64 (4WT + 16), rounded up to an even count.
Eigen::Index minimum_grid(double W, double T);

/// First row of h K(x_i, x_j) on the N midpoints of [-T, T], where
/// K(x, y) = sin(2 pi W (x - y)) / (pi (x - y)) and K(x, x) = 2W. The matrix is
/// Toeplitz, and uniform weights make it equal to D^{1/2} K D^{1/2}.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sinc_kernel_row(Scalar W, Scalar T, Eigen::Index N) {
  using std::sin;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar h = Scalar(2) * T / Scalar(N);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row(N);
  row[0] = Scalar(2) * W * h;
  for (Eigen::Index d = 1; d < N; ++d) {
    const Scalar r = h * Scalar(d);
    row[d] = h * sin(Scalar(2) * pi * W * r) / (pi * r);
  }
  return row;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sinc_kernel_matrix(Scalar W, Scalar T, Eigen::Index N) {
  const auto row = sinc_kernel_row(W, T, N);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> K(N, N);
  for (Eigen::Index j = 0; j < N; ++j)
    for (Eigen::Index i = 0; i < N; ++i) K(i, j) = row[i > j ? i - j : j - i];
  return K;
}

/// Throws ResolutionError when N < minimum_grid(W, T). N must be even: the
/// operator commutes with x -> -x, so the even and odd blocks are solved
/// separately and merged.
LocalizationSpectrum localization_spectrum(double W, double T, Eigen::Index N);

/// #{lambda in (0.01, 0.99)}.
Eigen::Index plunge_width(const LocalizationSpectrum& s);

}  // namespace tfloc
