#include "metacover/metaplectic_group.hpp"

#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"

namespace metacover {

MetaElement mul(const MetaElement& h1, const MetaElement& h2, const PadicContext& ctx) {
  return MetaElement{h1.g * h2.g, cocycle(h1.g, h2.g, ctx) * h1.eps * h2.eps};
}

MetaElement inv(const MetaElement& h, const PadicContext& ctx) {
  GL2 g_inv = h.g.inverse();
  Mu c = cocycle(h.g, g_inv, ctx);
  return MetaElement{std::move(g_inv), c.inv() * h.eps.inv()};
}

MetaElement inv_closed_form(const MetaElement& h, const PadicContext& ctx) {
  const GL2& g = h.g;
  Mu correction = g.c() != 0 ? Mu::one(ctx.n()) : hilbert(g.a(), g.d(), ctx);
  return MetaElement{g.inverse(), correction * h.eps.inv()};
}

MetaElement conjugate(const MetaElement& x, const MetaElement& h, const PadicContext& ctx) {
  return mul(mul(x, h, ctx), inv(x, ctx), ctx);
}

MetaElement lift(const GL2& g, const PadicContext& ctx) {
  return MetaElement{g, Mu::one(ctx.n())};
}

MetaElement identity_element(const PadicContext& ctx) { return lift(GL2::identity(), ctx); }

MetaElement central(const Mu& eps) { return MetaElement{GL2::identity(), eps}; }

MetaElement scale(const Mu& eps, const MetaElement& h) { return MetaElement{h.g, eps * h.eps}; }

MetaElement standard_element(StandardKind kind, const Rational& lambda, const PadicContext& ctx) {
  if (lambda == 0) throw Error(ErrorCode::ZeroInput, "standard element at zero");
  return lift(kind == StandardKind::Z ? GL2::scalar(lambda) : GL2::u(lambda), ctx);
}

}  // namespace metacover
