#pragma once

#include <array>

#include "metacover/rational.hpp"

namespace metacover {

/// An invertible 2x2 matrix [[a, b], [c, d]] with exact rational entries.
class GL2 {
 public:
  /// Throws Error(SingularMatrix) when ad - bc = 0.
  GL2(Rational a, Rational b, Rational c, Rational d);

  static GL2 identity();
  static GL2 scalar(const Rational& lambda);
  static GL2 diag(const Rational& a, const Rational& d);
  /// u(lambda) = diag(lambda, -lambda).
  static GL2 u(const Rational& lambda);

  const Rational& a() const noexcept { return e_[0]; }
  const Rational& b() const noexcept { return e_[1]; }
  const Rational& c() const noexcept { return e_[2]; }
  const Rational& d() const noexcept { return e_[3]; }
  /// Row-major entries.
  const std::array<Rational, 4>& entries() const noexcept { return e_; }

  Rational det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Rational trace() const { return e_[0] + e_[3]; }
  GL2 inverse() const;
  GL2 transpose() const;

  bool is_scalar() const { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }
  bool is_upper_triangular() const { return e_[2] == 0; }

  friend GL2 operator*(const GL2& x, const GL2& y);
  friend bool operator==(const GL2& x, const GL2& y) { return x.e_ == y.e_; }

 private:
  std::array<Rational, 4> e_;
};

/// x g x^-1
GL2 conjugate(const GL2& x, const GL2& g);

}  // namespace metacover
