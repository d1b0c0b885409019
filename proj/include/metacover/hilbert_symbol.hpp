#pragma once

#include "metacover/padic_field.hpp"
#include "metacover/rational.hpp"

namespace metacover {

/// n-th order Hilbert symbol <a, b> with values in mu_n.
///
/// Tame mode uses the tame symbol
///   <a, b> = chi((-1)^(v(a)v(b)) * a^v(b) / b^v(a)),
/// where chi(u) = u^((p-1)/n) mod p is read as a power of zeta_residue().
/// Dyadic mode is the quadratic symbol over Q_2,
///   (-1)^(eps(u)eps(w) + v(a)omega(w) + v(b)omega(u)).
/// Throws Error(ZeroInput) if either argument is zero.
Mu hilbert(const Rational& a, const Rational& b, const PadicContext& ctx);

/// Some x with <a, x> != 1. If n does not divide v(a) a unit is returned,
/// otherwise p (or -1 in the dyadic case when that is what works).
/// Throws Error(PreconditionViolated) when a is an n-th power.
Rational nondegeneracy_witness(const Rational& a, const PadicContext& ctx);

}  // namespace metacover
