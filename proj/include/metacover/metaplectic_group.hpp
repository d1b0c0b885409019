#pragma once

#include "metacover/kubota_cocycle.hpp"
#include "metacover/meta_element.hpp"

namespace metacover {

/// (g1, e1)(g2, e2) = (g1 g2, c(g1, g2) e1 e2).
MetaElement mul(const MetaElement& h1, const MetaElement& h2, const PadicContext& ctx);

/// (g, e)^-1 = (g^-1, c(g, g^-1)^-1 e^-1).
MetaElement inv(const MetaElement& h, const PadicContext& ctx);

/// Same value as inv() using the case split on the lower-left entry:
/// c(g, g^-1) is 1 when c != 0 and <d, a> when c = 0.
MetaElement inv_closed_form(const MetaElement& h, const PadicContext& ctx);

/// x h x^-1
MetaElement conjugate(const MetaElement& x, const MetaElement& h, const PadicContext& ctx);

/// (g, 1), the preferred section.
MetaElement lift(const GL2& g, const PadicContext& ctx);
MetaElement identity_element(const PadicContext& ctx);
/// (I, eps)
MetaElement central(const Mu& eps);
/// eps * h; central elements commute with everything.
MetaElement scale(const Mu& eps, const MetaElement& h);

enum class StandardKind { Z, U };

/// Z: z~(lambda) = (lambda I, 1). U: u~(lambda) = (diag(lambda, -lambda), 1).
/// Throws Error(ZeroInput) for lambda = 0.
MetaElement standard_element(StandardKind kind, const Rational& lambda, const PadicContext& ctx);

}  // namespace metacover
