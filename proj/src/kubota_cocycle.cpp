#include "metacover/kubota_cocycle.hpp"

#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"

namespace metacover {

const Rational& x_invariant(const GL2& m) { return m.c() != 0 ? m.c() : m.d(); }

Mu cocycle(const GL2& g1, const GL2& g2, const PadicContext& ctx) {
  const Rational x12 = x_invariant(g1 * g2);
  Rational first = x12 / x_invariant(g1);
  Rational second = x12 / (x_invariant(g2) * g1.det());
  return hilbert(first, second, ctx);
}

Mu splitting_s(const GL2& g, const PadicContext& ctx) {
  if (g.c() != 0 && g.d() != 0 && valuation(g.c(), ctx) % 2 != 0) {
    return hilbert(g.c(), g.d() * g.det(), ctx);
  }
  return Mu::one(ctx.n());
}

int default_splitting_depth(const PadicContext& ctx) {
  return ctx.mode() == SymbolMode::Dyadic ? 3 : 1;
}

bool in_congruence_subgroup(const GL2& k, int lambda, const PadicContext& ctx) {
  const auto& e = k.entries();
  const Rational diffs[4] = {e[0] - 1, e[1], e[2], e[3] - 1};
  for (const auto& x : diffs) {
    if (x != 0 && valuation(x, ctx) < lambda) return false;
  }
  return true;
}

MetaElement kappa(const GL2& k, int lambda, const PadicContext& ctx) {
  if (!in_congruence_subgroup(k, lambda, ctx)) {
    throw Error(ErrorCode::NotInCongruenceSubgroup,
                "matrix is not congruent to I mod p^" + std::to_string(lambda));
  }
  return MetaElement{k, splitting_s(k, ctx)};
}

}  // namespace metacover
