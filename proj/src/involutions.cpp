#include "metacover/involutions.hpp"

#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"

namespace metacover {

GL2 tau(const GL2& g) { return GL2(g.d(), g.b(), g.c(), g.a()); }

MetaElement sigma(const MetaElement& h, const PadicContext& ctx) {
  const GL2& g = h.g;
  Mu eps = h.eps.inv();
  if (g.c() != 0) eps *= hilbert(g.det(), g.c(), ctx);
  return MetaElement{tau(g), eps};
}

MetaElement sigma_by_definition(const MetaElement& h, const PadicContext& ctx) {
  auto left = standard_element(StandardKind::U, h.det(), ctx);
  auto right = standard_element(StandardKind::U, 1, ctx);
  return mul(mul(left, inv(h, ctx), ctx), right, ctx);
}

Mu phi_alpha(const GL2& g, const Rational& alpha, const PadicContext& ctx) {
  return hilbert(alpha, g.det(), ctx);
}

MetaElement sigma_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx) {
  if (alpha == 0) throw Error(ErrorCode::ZeroInput, "sigma_alpha with alpha = 0");
  return scale(phi_alpha(h.g, alpha, ctx), sigma(h, ctx));
}

MetaElement rho_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx) {
  if (alpha == 0) throw Error(ErrorCode::ZeroInput, "rho_alpha with alpha = 0");
  return sigma_alpha(inv(h, ctx), alpha, ctx);
}

}  // namespace metacover
