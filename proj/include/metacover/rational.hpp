#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace metacover {

/// Exact rationals stand in for elements of Q_p. mpq_class keeps values in
/// lowest terms with a positive denominator, so equality is value equality.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "num" or "num/den" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);

/// "num/den" with den > 0; integers are written as "num/1".
std::string format_rational(const Rational& q);

}  // namespace metacover
