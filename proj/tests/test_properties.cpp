// Randomized identities with generators local to this file, so that they do
// not share blind spots with the library sampler.
#include <random>
#include <vector>

#include "doctest.h"
#include "metacover/conjugacy_witness.hpp"
#include "metacover/hilbert_symbol.hpp"
#include "metacover/involutions.hpp"
#include "metacover/kubota_cocycle.hpp"
#include "metacover/metaplectic_group.hpp"
#include "metacover/sampling.hpp"

using namespace metacover;

namespace {

struct Gen {
  std::mt19937_64 rng;
  PadicContext ctx;

  Gen(std::uint64_t seed, const PadicContext& c) : rng(seed), ctx(c) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  // Products of small primes and powers of p, to hit units and non-units
  // with mixed square classes.
  Rational rational() {
    static const long primes[] = {2, 3, 5, 7, 11, 13, -1};
    Rational r = 1;
    int factors = static_cast<int>(small(0, 4));
    for (int i = 0; i < factors; ++i) {
      long f = primes[small(0, 6)];
      if (small(0, 1)) {
        r *= f;
      } else {
        r /= f;
      }
    }
    long e = small(-3, 3);
    Rational p(static_cast<unsigned long>(ctx.p()));
    for (long i = 0; i < std::abs(e); ++i) r = e > 0 ? Rational(r * p) : Rational(r / p);
    return r;
  }

  Rational entry() { return small(0, 4) == 0 ? Rational(0) : rational(); }

  GL2 matrix() {
    for (;;) {
      Rational a = entry(), b = entry(), c = entry(), d = entry();
      if (small(0, 5) == 0) a = d;  // repeated eigenvalue shapes
      if (a * d - b * c != 0) return GL2(a, b, c, d);
    }
  }

  Mu mu() { return Mu(small(0, ctx.n() - 1), ctx.n()); }
  MetaElement element() { return MetaElement{matrix(), mu()}; }
};

constexpr int kRounds = 120;

}  // namespace

TEST_CASE("hilbert symbol identities") {
  for (const auto& ctx : default_contexts()) {
    Gen gen(ctx.p() * 100 + ctx.n(), ctx);
    for (int i = 0; i < kRounds; ++i) {
      Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
      CHECK(hilbert(a * b, c, ctx) == hilbert(a, c, ctx) * hilbert(b, c, ctx));
      CHECK(hilbert(a, b * c, ctx) == hilbert(a, b, ctx) * hilbert(a, c, ctx));
      CHECK((hilbert(a, b, ctx) * hilbert(b, a, ctx)).is_one());
      CHECK(hilbert(a, -a, ctx).is_one());
      if (a != 1) CHECK(hilbert(a, 1 - a, ctx).is_one());
      Rational an = 1;
      for (std::uint32_t k = 0; k < ctx.n(); ++k) an *= a;
      CHECK(hilbert(an, b, ctx).is_one());
      if (!is_nth_power(a, ctx)) CHECK_FALSE(hilbert(a, nondegeneracy_witness(a, ctx), ctx).is_one());
    }
  }
}

TEST_CASE("cocycle and group law") {
  for (const auto& ctx : default_contexts()) {
    Gen gen(ctx.p() * 1000 + ctx.n(), ctx);
    for (int i = 0; i < kRounds; ++i) {
      GL2 g1 = gen.matrix(), g2 = gen.matrix(), g3 = gen.matrix();
      CHECK(cocycle(g1 * g2, g3, ctx) * cocycle(g1, g2, ctx) ==
            cocycle(g1, g2 * g3, ctx) * cocycle(g2, g3, ctx));
      MetaElement a = gen.element(), b = gen.element(), c = gen.element();
      CHECK(mul(mul(a, b, ctx), c, ctx) == mul(a, mul(b, c, ctx), ctx));
      CHECK(mul(a, inv(a, ctx), ctx) == identity_element(ctx));
      CHECK(inv(a, ctx) == inv_closed_form(a, ctx));
    }
  }
}

TEST_CASE("involutions and witnesses") {
  for (const auto& ctx : default_contexts()) {
    Gen gen(ctx.p() * 10000 + ctx.n(), ctx);
    for (int i = 0; i < kRounds; ++i) {
      MetaElement a = gen.element(), b = gen.element();
      Rational alpha = gen.rational();
      CHECK(sigma(mul(a, b, ctx), ctx) == mul(sigma(b, ctx), sigma(a, ctx), ctx));
      CHECK(sigma(a, ctx) == sigma_by_definition(a, ctx));
      CHECK(sigma_alpha(sigma_alpha(a, alpha, ctx), alpha, ctx) == a);
      CHECK(rho_alpha(mul(a, b, ctx), alpha, ctx) ==
            mul(rho_alpha(a, alpha, ctx), rho_alpha(b, alpha, ctx), ctx));
      CHECK(witness(a, ctx).verified);
      CHECK(witness_alpha(a, alpha, ctx).verified);
      CHECK(rho_witness(a, alpha, ctx).verified);
    }
  }
}
