#pragma once

#include "metacover/gl2.hpp"
#include "metacover/meta_element.hpp"
#include "metacover/padic_field.hpp"

namespace metacover {

/// X(m): the lower-left entry if nonzero, else the lower-right entry.
const Rational& x_invariant(const GL2& m);

/// c(g1, g2) = < X(g1 g2) / X(g1), X(g1 g2) / (X(g2) det g1) >.
Mu cocycle(const GL2& g1, const GL2& g2, const PadicContext& ctx);

/// s(g) = <c, d det g> when cd != 0 and v(c) is odd, 1 otherwise.
Mu splitting_s(const GL2& g, const PadicContext& ctx);

/// Default splitting depth: 1 in tame mode, 3 in dyadic mode.
int default_splitting_depth(const PadicContext& ctx);

/// k in K_lambda, i.e. every entry of k - I has valuation >= lambda.
bool in_congruence_subgroup(const GL2& k, int lambda, const PadicContext& ctx);

/// kappa(k) = (k, s(k)). Throws Error(NotInCongruenceSubgroup) if k is not
/// in K_lambda.
MetaElement kappa(const GL2& k, int lambda, const PadicContext& ctx);

}  // namespace metacover
