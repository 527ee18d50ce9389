#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace tfloc {

/// Truncated Taylor expansion c_0 + c_1 h + ... + c_N h^N of a function
/// around a point. Arithmetic on jets propagates exact derivatives up to
/// order N, which is how bell and atom derivatives are evaluated.
template <typename Scalar, int N>
class Jet {
 public:
  static constexpr int kOrder = N;

  Jet() { c_.fill(Scalar(0)); }

  static Jet constant(Scalar value) {
    Jet j;
    j.c_[0] = value;
    return j;
  }

  /// The identity function expanded at x0.
  static Jet variable(Scalar x0) {
    Jet j;
    j.c_[0] = x0;
    if constexpr (N >= 1) j.c_[1] = Scalar(1);
    return j;
  }

  Scalar& operator[](int i) { return c_[i]; }
  const Scalar& operator[](int i) const { return c_[i]; }
  Scalar value() const { return c_[0]; }

  /// n-th derivative at the expansion point.
  Scalar derivative(int n) const {
    Scalar f = Scalar(1);
    for (int i = 2; i <= n; ++i) f *= Scalar(i);
    return f * c_[n];
  }

  /// Jet of g(s) = f(a + b s) given the jet of f at a + b s0.
  Jet affine_pullback(Scalar b) const {
    Jet out;
    Scalar p = Scalar(1);
    for (int i = 0; i <= N; ++i) {
      out.c_[i] = c_[i] * p;
      p *= b;
    }
    return out;
  }

  Jet& operator+=(const Jet& o) {
    for (int i = 0; i <= N; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int i = 0; i <= N; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet& operator*=(Scalar s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, Scalar s) { return a *= s; }
  friend Jet operator*(Scalar s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= Scalar(-1); }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out;
    for (int n = 0; n <= N; ++n) {
      Scalar s = Scalar(0);
      for (int k = 0; k <= n; ++k) s += a.c_[k] * b.c_[n - k];
      out.c_[n] = s;
    }
    return out;
  }

  /// sin and cos of a jet, computed together from s' = c a', c' = -s a'.
  friend void sincos(const Jet& a, Jet& s, Jet& c) {
    s = Jet();
    c = Jet();
    s.c_[0] = std::sin(a.c_[0]);
    c.c_[0] = std::cos(a.c_[0]);
    for (int n = 1; n <= N; ++n) {
      Scalar ss = Scalar(0), cc = Scalar(0);
      for (int k = 1; k <= n; ++k) {
        ss += Scalar(k) * a.c_[k] * c.c_[n - k];
        cc += Scalar(k) * a.c_[k] * s.c_[n - k];
      }
      s.c_[n] = ss / Scalar(n);
      c.c_[n] = -cc / Scalar(n);
    }
  }

  friend Jet sin(const Jet& a) {
    Jet s, c;
    sincos(a, s, c);
    return s;
  }
  friend Jet cos(const Jet& a) {
    Jet s, c;
    sincos(a, s, c);
    return c;
  }

 private:
  std::array<Scalar, N + 1> c_;
};

/// Highest derivative order carried through bells, atoms and transforms.
inline constexpr int kMaxDerivativeOrder = 8;

using Jet8 = Jet<double, kMaxDerivativeOrder>;

}  // namespace tfloc
