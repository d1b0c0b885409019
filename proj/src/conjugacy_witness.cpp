#include "metacover/conjugacy_witness.hpp"

#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"

namespace metacover {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Scalar: return "Scalar";
    case CaseTag::Companion: return "Companion";
    case CaseTag::DiagonalDistinct: return "DiagonalDistinct";
    case CaseTag::JordanBlock: return "JordanBlock";
  }
  return "Unknown";
}

CanonicalCase classify(const GL2& g) {
  if (g.is_scalar()) return CanonicalCase{CaseTag::Scalar, std::nullopt, g};

  CanonicalCase result{CaseTag::Scalar, std::nullopt, g};
  if (g.c() != 0) {
    Rational v = -g.det();
    result = CanonicalCase{CaseTag::Companion, GL2(0, v / g.c(), 1, g.d() / g.c()),
                           GL2(0, v, 1, g.trace())};
  } else if (g.a() != g.d()) {
    result = CanonicalCase{CaseTag::DiagonalDistinct, GL2(1, g.b() / (g.a() - g.d()), 0, -1),
                           GL2::diag(g.a(), g.d())};
  } else {
    result = CanonicalCase{CaseTag::JordanBlock, GL2(1, 0, 0, g.b()), GL2(g.a(), 1, 0, g.a())};
  }
  if (!(conjugate(*result.conjugator, g) == result.target)) {
    throw Error(ErrorCode::VerificationFailed, "classifier produced a wrong conjugator");
  }
  return result;
}

GL2 normalize_diagonal_conjugator(const GL2& x, const GL2& target) {
  if (!(target.b() == 0 && target.c() == 0 && target.a() != target.d())) {
    throw Error(ErrorCode::WrongKind, "target is not diagonal with distinct entries");
  }
  const Rational& a = target.a();
  const Rational& d = target.d();
  const Rational& f = x.a();
  const Rational& q = x.c();
  Rational t11, t22;
  if (q == 0) {
    t11 = 1 / f;
    t22 = 1 / x.d();
  } else if (f == 0) {
    t11 = 1 / x.b();
    t22 = 1 / (q * d);
  } else {
    t11 = d / ((d - a) * f);
    t22 = 1 / (q * d);
  }
  return GL2::diag(t11, t22) * x;
}

Mu conjugator_defect(const GL2& x, const GL2& target, const PadicContext& ctx) {
  GL2 back = x.inverse() * target.inverse();
  return cocycle(back, x, ctx) * cocycle(x, back, ctx).inv();
}

MetaElement base_witness(const GL2& target, CaseTag kind, const PadicContext& ctx) {
  switch (kind) {
    case CaseTag::Companion: {
      if (!(target.a() == 0 && target.c() == 1)) {
        throw Error(ErrorCode::WrongKind, "not a companion matrix [[0,v],[1,w]]");
      }
      const Rational& v = target.b();
      const Rational& w = target.d();
      return lift(GL2(1, 0, -w / v, 1), ctx);
    }
    case CaseTag::DiagonalDistinct:
      if (!(target.b() == 0 && target.c() == 0 && target.a() != target.d())) {
        throw Error(ErrorCode::WrongKind, "not diag(a, d) with a != d");
      }
      return lift(GL2(0, target.d(), 1, 0), ctx);
    case CaseTag::JordanBlock:
      if (!(target.c() == 0 && target.b() == 1 && target.a() == target.d())) {
        throw Error(ErrorCode::WrongKind, "not a Jordan block [[b,1],[0,b]]");
      }
      return identity_element(ctx);
    case CaseTag::Scalar:
      break;
  }
  throw Error(ErrorCode::WrongKind, "scalar matrices have no base witness");
}

Mu witness_factor(const MetaElement& h, const PadicContext& ctx) {
  return cocycle(h.g.inverse(), h.g, ctx).pow(-2) * h.eps.pow(-2);
}

namespace {

// z for (g, 1); the same z serves every (g, eta).
MetaElement lift_witness(const GL2& g, CaseTag& tag, const PadicContext& ctx) {
  CanonicalCase cc = classify(g);
  tag = cc.tag;
  if (cc.tag == CaseTag::Scalar) return lift(GL2(0, g.a(), 1, 0), ctx);

  GL2 x = *cc.conjugator;
  if (cc.tag == CaseTag::DiagonalDistinct) x = normalize_diagonal_conjugator(x, cc.target);

  // Twisting by z~(s) absorbs the leftover <s, det g> A^-2 factor. A is
  // trivial for companion and diagonal targets.
  Rational s = 1;
  if (cc.tag == CaseTag::JordanBlock) s = x.c() == 0 ? Rational(x.a() * x.d()) : Rational(-(x.c() * x.c()));

  MetaElement x_lift = lift(x, ctx);
  MetaElement u = mul(x_lift, inv(standard_element(StandardKind::Z, s, ctx), ctx), ctx);
  MetaElement y = base_witness(cc.target, cc.tag, ctx);
  return mul(mul(sigma(u, ctx), y, ctx), x_lift, ctx);
}

WitnessReport finish(CaseTag tag, MetaElement z, MetaElement lhs, const MetaElement& h,
                     const Mu& factor, const PadicContext& ctx) {
  MetaElement rhs = scale(factor, conjugate(z, h, ctx));
  bool ok = lhs == rhs;
  return WitnessReport{tag, std::move(z), std::move(lhs), std::move(rhs), ok};
}

}  // namespace

WitnessReport witness(const MetaElement& h, const PadicContext& ctx) {
  CaseTag tag = CaseTag::Scalar;
  MetaElement z = lift_witness(h.g, tag, ctx);
  return finish(tag, std::move(z), sigma(h, ctx), h, witness_factor(h, ctx), ctx);
}

WitnessReport witness_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx) {
  if (alpha == 0) throw Error(ErrorCode::ZeroInput, "witness_alpha with alpha = 0");
  WitnessReport base = witness(h, ctx);
  MetaElement lhs = sigma_alpha(h, alpha, ctx);
  if (is_nth_power(h.det(), ctx)) {
    return finish(base.tag, std::move(base.z), std::move(lhs), h, witness_factor(h, ctx), ctx);
  }
  // u = z~(1/alpha) satisfies u h u^-1 = <alpha, det h>^-1 h, so
  // sigma_alpha(h) = sigma(u)^-1 sigma(h) sigma(u).
  MetaElement u = standard_element(StandardKind::Z, 1 / alpha, ctx);
  MetaElement z = mul(inv(sigma(u, ctx), ctx), base.z, ctx);
  return finish(base.tag, std::move(z), std::move(lhs), h, witness_factor(h, ctx), ctx);
}

WitnessReport rho_witness(const MetaElement& h, const Rational& alpha, const PadicContext& ctx) {
  if (alpha == 0) throw Error(ErrorCode::ZeroInput, "rho_witness with alpha = 0");
  // h^-1 = (g^-1, c(g, g^-1)^-1 eta^-1); its witness factor collapses to eta^2.
  MetaElement h_inv = inv(h, ctx);
  WitnessReport w = witness_alpha(h_inv, alpha, ctx);
  MetaElement target = scale(h.eps.pow(2), h_inv);
  MetaElement lhs = rho_alpha(h, alpha, ctx);
  return finish(w.tag, std::move(w.z), std::move(lhs), target, Mu::one(ctx.n()), ctx);
}

ObstructionReport centralizer_obstruction(const PadicContext& ctx,
                                          std::span<const GL2> centralizer) {
  if (ctx.n() <= 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "obstruction needs n >= 3; every eps in mu_2 satisfies eps^2 = 1");
  }
  const GL2 g(1, 1, 0, 1);
  Mu eps(1, ctx.n());
  MetaElement h{g, eps};
  ObstructionReport report{eps, h, sigma(h, ctx), 0, std::vector<std::size_t>(ctx.n(), 0), 0,
                           false};
  for (const GL2& x : centralizer) {
    if (!(x.c() == 0 && x.a() == x.d())) {
      throw Error(ErrorCode::PreconditionViolated, "sample is not in the centralizer of [[1,1],[0,1]]");
    }
    GL2 x_inv = x.inverse();
    Mu lambda = cocycle(x * g, x_inv, ctx) * cocycle(x, g, ctx) * cocycle(x, x_inv, ctx).inv();
    ++report.lambda_histogram[lambda.exp()];
    for (std::uint32_t e = 0; e < ctx.n(); ++e) {
      MetaElement z{x, Mu(e, ctx.n())};
      if (conjugate(z, h, ctx) == report.sigma_h) ++report.conjugate_matches;
    }
    ++report.samples;
  }
  report.witness_verified = witness(h, ctx).verified;
  return report;
}

bool square_map_trivial(std::uint32_t n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "n must be at least 2");
  for (std::uint32_t e = 0; e < n; ++e) {
    if ((2 * static_cast<std::uint64_t>(e)) % n != 0) return false;
  }
  return true;
}

}  // namespace metacover
