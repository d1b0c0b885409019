#pragma once

#include "metacover/metaplectic_group.hpp"

namespace metacover {

/// tau(g) = w0 g^T w0, i.e. [[a,b],[c,d]] -> [[d,b],[c,a]].
GL2 tau(const GL2& g);

/// The lift sigma of tau, by the closed form
///   sigma((g, e)) = (tau(g), <det g, c> e^-1)   if c != 0,
///                   (tau(g), e^-1)              if c = 0.
MetaElement sigma(const MetaElement& h, const PadicContext& ctx);

/// sigma(h) evaluated from its definition u~(det h) h^-1 u~(1) with the
/// group law. Slower; kept as an independent route to sigma().
MetaElement sigma_by_definition(const MetaElement& h, const PadicContext& ctx);

/// phi_alpha(g) = <alpha, det g>, a character of GL(2).
Mu phi_alpha(const GL2& g, const Rational& alpha, const PadicContext& ctx);

/// sigma_alpha(h) = <alpha, det h> sigma(h). Throws Error(ZeroInput) for alpha = 0.
MetaElement sigma_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx);

/// rho_alpha(h) = sigma_alpha(h^-1), an involutive automorphism.
MetaElement rho_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx);

}  // namespace metacover
