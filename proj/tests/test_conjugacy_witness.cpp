#include <vector>

#include "doctest.h"
#include "metacover/conjugacy_witness.hpp"
#include "metacover/error.hpp"
#include "metacover/hilbert_symbol.hpp"
#include "metacover/involutions.hpp"
#include "metacover/kubota_cocycle.hpp"
#include "metacover/metaplectic_group.hpp"
#include "metacover/sampling.hpp"

using namespace metacover;

namespace {

// Both sides of sigma(h) = c(g^-1, g)^-2 eta^-2 z h z^-1, recomputed here
// from the group law rather than read off the report.
bool conjugates_to_sigma(const MetaElement& z, const MetaElement& h, const PadicContext& ctx) {
  Mu factor = (cocycle(h.g.inverse(), h.g, ctx) * h.eps).pow(-2);
  return sigma(h, ctx) == scale(factor, mul(mul(z, h, ctx), inv(z, ctx), ctx));
}

}  // namespace

TEST_CASE("classify") {
  CHECK(classify(GL2::scalar(3)).tag == CaseTag::Scalar);

  auto companion = classify(GL2(1, 2, 3, 4));
  CHECK(companion.tag == CaseTag::Companion);
  CHECK(companion.target == GL2(0, 2, 1, 5));
  CHECK(conjugate(*companion.conjugator, GL2(1, 2, 3, 4)) == companion.target);

  auto diagonal = classify(GL2(2, 7, 0, 5));
  CHECK(diagonal.tag == CaseTag::DiagonalDistinct);
  CHECK(*diagonal.conjugator == GL2(1, Rational(-7, 3), 0, -1));
  CHECK(diagonal.target == GL2::diag(2, 5));

  auto jordan = classify(GL2(2, 9, 0, 2));
  CHECK(jordan.tag == CaseTag::JordanBlock);
  CHECK(*jordan.conjugator == GL2(1, 0, 0, 9));
  CHECK(jordan.target == GL2(2, 1, 0, 2));
}

TEST_CASE("classify is sound on samples") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    for (std::uint64_t i = 0; i < 300; ++i) {
      GL2 g = sample_gl2(cfg, ctx, i, 0);
      auto cc = classify(g);
      if (cc.tag == CaseTag::Scalar) {
        CHECK(g.is_scalar());
        continue;
      }
      CHECK(conjugate(*cc.conjugator, g) == cc.target);
    }
  }
}

TEST_CASE("base witnesses") {
  auto ctx = PadicContext::make(5, 4);
  CHECK(base_witness(GL2(0, 2, 1, 5), CaseTag::Companion, ctx) ==
        lift(GL2(1, 0, Rational(-5, 2), 1), ctx));
  CHECK(base_witness(GL2::diag(2, 5), CaseTag::DiagonalDistinct, ctx) ==
        lift(GL2(0, 5, 1, 0), ctx));
  CHECK(base_witness(GL2(2, 1, 0, 2), CaseTag::JordanBlock, ctx) == identity_element(ctx));
  for (const auto& [target, kind] : std::vector<std::pair<GL2, CaseTag>>{
           {GL2(0, 2, 1, 5), CaseTag::Companion},
           {GL2::diag(2, 5), CaseTag::DiagonalDistinct},
           {GL2(2, 1, 0, 2), CaseTag::JordanBlock}}) {
    CHECK(conjugates_to_sigma(base_witness(target, kind, ctx), lift(target, ctx), ctx));
  }
  CHECK_THROWS_AS(base_witness(GL2(1, 2, 3, 4), CaseTag::Companion, ctx), Error);
  CHECK_THROWS_AS(base_witness(GL2::scalar(2), CaseTag::Scalar, ctx), Error);
}

TEST_CASE("diagonal conjugator normalization") {
  auto ctx = PadicContext::make(7, 3);
  GL2 target = GL2::diag(2, 5);
  // x = D P conjugates g = P^-1 target P onto target for any diagonal D;
  // P with a zero upper-left entry and P with nonzero lower-left both occur.
  for (const GL2& P : {GL2::identity(), GL2(1, 1, 1, 2), GL2(0, 1, 1, 2), GL2(3, 7, -14, 1)}) {
    GL2 g = P.inverse() * target * P;
    for (const GL2& D : {GL2::identity(), GL2::diag(3, -2), GL2::diag(Rational(1, 7), 49)}) {
      GL2 x = D * P;
      REQUIRE(conjugate(x, g) == target);
      GL2 y = normalize_diagonal_conjugator(x, target);
      CHECK(conjugate(y, g) == target);
      CHECK(conjugator_defect(y, target, ctx).is_one());
    }
  }
  CHECK_THROWS_AS(normalize_diagonal_conjugator(GL2::identity(), GL2(2, 1, 0, 2)), Error);
}

TEST_CASE("scalar and companion witnesses") {
  for (const auto& ctx : default_contexts()) {
    Rational a = 6;
    auto r = witness(lift(GL2::scalar(a), ctx), ctx);
    CHECK(r.tag == CaseTag::Scalar);
    CHECK(r.z == lift(GL2(0, a, 1, 0), ctx));
    CHECK(r.verified);
    CHECK(cocycle(GL2::scalar(1 / a), GL2::scalar(a), ctx) == hilbert(a, a, ctx).inv());

    GL2 g(0, 3, 1, 7);
    CHECK(cocycle(g.inverse(), g, ctx).is_one());
    auto rc = witness(lift(g, ctx), ctx);
    CHECK(rc.verified);
    CHECK(conjugates_to_sigma(rc.z, lift(g, ctx), ctx));
  }
}

TEST_CASE("witness on corpus and samples") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    const std::size_t total = branch_corpus(ctx).size() + 150;
    for (std::uint64_t i = 0; i < total; ++i) {
      MetaElement h{sample_gl2(cfg, ctx, i, 0), sample_mu(cfg, ctx, i, 0)};
      auto r = witness(h, ctx);
      CHECK(r.verified);
      CHECK(conjugates_to_sigma(r.z, h, ctx));
    }
  }
}

TEST_CASE("witness_alpha and rho_witness") {
  SampleConfig cfg;
  for (const auto& ctx : default_contexts()) {
    for (std::uint64_t i = 0; i < 150; ++i) {
      MetaElement h{sample_gl2(cfg, ctx, i, 0), sample_mu(cfg, ctx, i, 0)};
      Rational alpha = sample_alpha(cfg, ctx, i, 1);
      auto ra = witness_alpha(h, alpha, ctx);
      CHECK(ra.verified);
      Mu factor = (cocycle(h.g.inverse(), h.g, ctx) * h.eps).pow(-2);
      CHECK(sigma_alpha(h, alpha, ctx) ==
            scale(factor, mul(mul(ra.z, h, ctx), inv(ra.z, ctx), ctx)));
      if (is_nth_power(h.det(), ctx)) CHECK(ra.z == witness(h, ctx).z);

      auto rr = rho_witness(h, alpha, ctx);
      CHECK(rr.verified);
      MetaElement target = scale(h.eps.pow(2), inv(h, ctx));
      CHECK(rho_alpha(h, alpha, ctx) == mul(mul(rr.z, target, ctx), inv(rr.z, ctx), ctx));
    }
  }
  auto ctx = PadicContext::make(7, 3);
  Rational g(static_cast<unsigned long>(ctx.residue_generator()));
  CHECK(witness_alpha(lift(GL2::diag(1, 7), ctx), g, ctx).verified);
  MetaElement e = identity_element(ctx);
  CHECK(rho_witness(e, g, ctx).verified);
  CHECK(rho_alpha(e, g, ctx) == mul(mul(e, inv(e, ctx), ctx), inv(e, ctx), ctx));
}

TEST_CASE("rho of an element with eta^2 = 1 is conjugate to its inverse") {
  auto ctx = PadicContext::make(5, 4);
  MetaElement h{GL2(1, 2, 3, 4), Mu(2, 4)};
  auto r = rho_witness(h, 2, ctx);
  CHECK(r.verified);
  CHECK(rho_alpha(h, 2, ctx) == mul(mul(r.z, inv(h, ctx), ctx), inv(r.z, ctx), ctx));
}

TEST_CASE("centralizer obstruction for n >= 3") {
  SampleConfig cfg;
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{5, 4}, {7, 3}, {13, 6}}) {
    auto ctx = PadicContext::make(p, n);
    std::vector<GL2> samples;
    for (std::uint64_t i = 0; i < 500; ++i) samples.push_back(sample_centralizer(cfg, ctx, i));
    auto report = centralizer_obstruction(ctx, samples);
    CHECK(report.samples == 500);
    CHECK(report.lambda_histogram.at(0) == 500);
    CHECK(report.conjugate_matches == 0);
    CHECK(report.sigma_h == MetaElement{GL2(1, 1, 0, 1), report.eps.inv()});
    CHECK_FALSE(report.eps.inv() == report.eps);
    CHECK(report.holds());

    // Same h: the eta^-2 correction restores conjugacy.
    auto w = witness(report.h, ctx);
    CHECK(w.verified);
    CHECK(conjugates_to_sigma(w.z, report.h, ctx));
  }
  std::vector<GL2> one = {GL2::identity()};
  CHECK_THROWS_AS(centralizer_obstruction(PadicContext::make(3, 2), one), Error);
  std::vector<GL2> bad = {GL2(1, 0, 1, 1)};
  CHECK_THROWS_AS(centralizer_obstruction(PadicContext::make(7, 3), bad), Error);
}

TEST_CASE("square map") {
  CHECK(square_map_trivial(2));
  CHECK_FALSE(square_map_trivial(3));
  CHECK_FALSE(square_map_trivial(4));
  CHECK_FALSE(square_map_trivial(6));
  CHECK_THROWS_AS(square_map_trivial(1), Error);
}
