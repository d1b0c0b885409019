#include "metacover/gl2.hpp"

#include <utility>

#include "metacover/error.hpp"

namespace metacover {

GL2::GL2(Rational a, Rational b, Rational c, Rational d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det() == 0) {
    throw Error(ErrorCode::SingularMatrix,
                "singular matrix [" + format_rational(e_[0]) + "," + format_rational(e_[1]) +
                    ";" + format_rational(e_[2]) + "," + format_rational(e_[3]) + "]");
  }
}

GL2 GL2::identity() { return GL2(1, 0, 0, 1); }

GL2 GL2::scalar(const Rational& lambda) { return GL2(lambda, 0, 0, lambda); }

GL2 GL2::diag(const Rational& a, const Rational& d) { return GL2(a, 0, 0, d); }

GL2 GL2::u(const Rational& lambda) { return GL2(lambda, 0, 0, -lambda); }

GL2 GL2::inverse() const {
  Rational delta = det();
  return GL2(e_[3] / delta, -e_[1] / delta, -e_[2] / delta, e_[0] / delta);
}

GL2 GL2::transpose() const { return GL2(e_[0], e_[2], e_[1], e_[3]); }

GL2 operator*(const GL2& x, const GL2& y) {
  const auto& l = x.e_;
  const auto& r = y.e_;
  return GL2(l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
             l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]);
}

GL2 conjugate(const GL2& x, const GL2& g) { return x * g * x.inverse(); }

}  // namespace metacover
