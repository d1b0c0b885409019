#include "metacover/hilbert_symbol.hpp"

#include "metacover/error.hpp"

namespace metacover {

namespace {

Mu dyadic_symbol(const Rational& a, const Rational& b, const PadicContext& ctx) {
  auto alpha = valuation(a, ctx);
  auto beta = valuation(b, ctx);
  auto u = unit_residue(a, 3, ctx);
  auto w = unit_residue(b, 3, ctx);
  auto eps = [](std::uint64_t x) -> std::int64_t { return ((x - 1) / 2) & 1; };
  auto omega = [](std::uint64_t x) -> std::int64_t { return ((x * x - 1) / 8) & 1; };
  return Mu(eps(u) * eps(w) + alpha * omega(w) + beta * omega(u), 2);
}

Mu tame_symbol(const Rational& a, const Rational& b, const PadicContext& ctx) {
  const auto p = ctx.p();
  auto va = valuation(a, ctx);
  auto vb = valuation(b, ctx);
  auto ua = unit_residue(a, 1, ctx);
  auto ub = unit_residue(b, 1, ctx);
  // a^v(b) / b^v(a) has valuation zero; only its residue matters.
  auto signed_pow = [p](std::uint64_t u, std::int64_t e) {
    std::uint64_t base = e >= 0 ? u : pow_mod(u, p - 2, p);
    return pow_mod(base, static_cast<std::uint64_t>(e >= 0 ? e : -e), p);
  };
  unsigned __int128 t = signed_pow(ua, vb);
  t = t * signed_pow(ub, -va) % p;
  if ((va * vb) % 2 != 0) t = (p - t) % p;
  auto r = pow_mod(static_cast<std::uint64_t>(t), (p - 1) / ctx.n(), p);
  int e = ctx.log_zeta(r);
  if (e < 0) {
    throw Error(ErrorCode::VerificationFailed, "tame symbol landed outside mu_n");
  }
  return Mu(e, ctx.n());
}

}  // namespace

Mu hilbert(const Rational& a, const Rational& b, const PadicContext& ctx) {
  if (a == 0 || b == 0) throw Error(ErrorCode::ZeroInput, "Hilbert symbol of zero");
  if (ctx.mode() == SymbolMode::Dyadic) return dyadic_symbol(a, b, ctx);
  return tame_symbol(a, b, ctx);
}

Rational nondegeneracy_witness(const Rational& a, const PadicContext& ctx) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "nondegeneracy witness of zero");
  if (is_nth_power(a, ctx)) {
    throw Error(ErrorCode::PreconditionViolated,
                "no witness exists: " + format_rational(a) + " is an n-th power");
  }
  auto v = valuation(a, ctx);
  Rational x;
  if (ctx.mode() == SymbolMode::Dyadic) {
    // Odd valuation pairs nontrivially with 5; an even-valuation non-square
    // has unit part 3 or 7 mod 8 (detected by -1) or 5 mod 8 (detected by 2).
    if (v % 2 != 0) {
      x = 5;
    } else if (unit_residue(a, 2, ctx) == 3) {
      x = -1;
    } else {
      x = 2;
    }
  } else if (v % static_cast<std::int64_t>(ctx.n()) != 0) {
    x = static_cast<unsigned long>(ctx.residue_generator());
  } else {
    x = static_cast<unsigned long>(ctx.p());
  }
  if (hilbert(a, x, ctx).is_one()) {
    throw Error(ErrorCode::VerificationFailed,
                "nondegeneracy witness construction failed for " + format_rational(a));
  }
  return x;
}

}  // namespace metacover
