#include <vector>

#include "doctest.h"
#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"
#include "metacover/kubota_cocycle.hpp"
#include "metacover/sampling.hpp"

using namespace metacover;

TEST_CASE("X invariant") {
  CHECK(x_invariant(GL2(1, 2, 3, 4)) == 3);
  CHECK(x_invariant(GL2(2, 0, 0, 3)) == 3);
  CHECK(x_invariant(GL2(1, 5, 0, 2)) == 2);
}

TEST_CASE("cocycle on standard elements") {
  for (const auto& ctx : default_contexts()) {
    Rational p(static_cast<unsigned long>(ctx.p()));
    for (const Rational& l1 : std::vector<Rational>{2, -3, p, Rational(7, 3)}) {
      for (const Rational& l2 : std::vector<Rational>{5, -1, p * 6, 1 / p}) {
        CHECK(cocycle(GL2::scalar(l1), GL2::scalar(l2), ctx) == hilbert(l1, l2, ctx));
        CHECK(cocycle(GL2::u(l1), GL2::u(l2), ctx) == hilbert(l1, -l2, ctx));
      }
    }
  }
}

TEST_CASE("cocycle with identity and inverse") {
  auto ctx = PadicContext::make(5, 4);
  GL2 upper(2, 7, 0, 5);
  CHECK(cocycle(GL2::identity(), upper, ctx).is_one());
  CHECK(cocycle(upper, GL2::identity(), ctx).is_one());
  CHECK(cocycle(upper, upper.inverse(), ctx) == hilbert(5, 2, ctx));
  GL2 lower(1, 2, 3, 4);
  CHECK(cocycle(lower, lower.inverse(), ctx).is_one());
}

TEST_CASE("cocycle identity on sampled triples") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      GL2 g1 = sample_gl2(cfg, ctx, i, 0);
      GL2 g2 = sample_gl2(cfg, ctx, i, 1);
      GL2 g3 = sample_gl2(cfg, ctx, i, 2);
      CHECK(cocycle(g1 * g2, g3, ctx) * cocycle(g1, g2, ctx) ==
            cocycle(g1, g2 * g3, ctx) * cocycle(g2, g3, ctx));
    }
  }
}

TEST_CASE("splitting s") {
  for (const auto& ctx : default_contexts()) {
    Rational p(static_cast<unsigned long>(ctx.p()));
    CHECK(splitting_s(GL2(2, 9, 0, 3), ctx).is_one());
    CHECK(splitting_s(GL2(1, 0, p, 1), ctx).is_one());
    CHECK(splitting_s(GL2(1, 0, p, 2), ctx) == hilbert(p, 4, ctx));
    CHECK(splitting_s(GL2(1, 0, p, 2), ctx) == hilbert(p, 2, ctx).pow(2));
    // even valuation of c
    CHECK(splitting_s(GL2(1, 0, p * p, 2), ctx).is_one());
  }
}

TEST_CASE("kappa") {
  auto ctx = PadicContext::make(7, 3);
  CHECK(kappa(GL2::identity(), 1, ctx) == MetaElement{GL2::identity(), Mu::one(3)});
  CHECK(kappa(GL2(1, 7, 0, 1), 1, ctx) == MetaElement{GL2(1, 7, 0, 1), Mu::one(3)});
  CHECK(in_congruence_subgroup(GL2(8, 7, 49, 1), 1, ctx));
  CHECK_FALSE(in_congruence_subgroup(GL2(8, 7, 49, 1), 2, ctx));
  CHECK_FALSE(in_congruence_subgroup(GL2(Rational(1, 7), 0, 0, 1), 0, ctx));
  try {
    kappa(GL2(2, 0, 0, 1), 1, ctx);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInCongruenceSubgroup);
  }
  CHECK(default_splitting_depth(ctx) == 1);
  CHECK(default_splitting_depth(PadicContext::make(2, 2)) == 3);
}

TEST_CASE("kappa is multiplicative on the default congruence subgroup") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    int lambda = default_splitting_depth(ctx);
    for (std::uint64_t i = 0; i < 300; ++i) {
      GL2 k1 = sample_congruence(cfg, ctx, lambda, i, 0);
      GL2 k2 = sample_congruence(cfg, ctx, lambda, i, 1);
      REQUIRE(in_congruence_subgroup(k1, lambda, ctx));
      CHECK(cocycle(k1, k2, ctx) ==
            splitting_s(k1 * k2, ctx) * splitting_s(k1, ctx).inv() * splitting_s(k2, ctx).inv());
    }
  }
}
