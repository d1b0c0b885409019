#include "metacover/sampling.hpp"

#include "metacover/error.hpp"

namespace metacover {

std::vector<PadicContext> default_contexts() {
  return {PadicContext::make(2, 2), PadicContext::make(3, 2), PadicContext::make(5, 2),
          PadicContext::make(5, 4), PadicContext::make(7, 3), PadicContext::make(13, 6)};
}

void validate(const SampleConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::PreconditionViolated, "trials must be at least 1");
  if (cfg.height < 2) throw Error(ErrorCode::PreconditionViolated, "height must be at least 2");
  if (cfg.contexts.empty()) throw Error(ErrorCode::PreconditionViolated, "no contexts configured");
  if (cfg.splitting_depth < 0) {
    throw Error(ErrorCode::PreconditionViolated, "splitting depth must be non-negative");
  }
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rng trial_rng(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
              std::uint64_t stream) {
  Rng mix(cfg.seed);
  std::uint64_t s = mix.next();
  for (std::uint64_t word : {ctx.p(), std::uint64_t{ctx.n()}, stream, i}) {
    Rng step(s ^ word);
    s = step.next();
  }
  return Rng(s);
}

namespace {

Rational p_power(const PadicContext& ctx, std::int64_t e) {
  Integer pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), ctx.p(), static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e >= 0 ? Rational(pe) : Rational(Integer(1), pe);
  r.canonicalize();
  return r;
}

Rational draw_nonzero(Rng& rng, const SampleConfig& cfg, const PadicContext& ctx) {
  std::int64_t m = rng.between(1, cfg.height);
  if (rng.below(2)) m = -m;
  std::int64_t e = rng.below(2) ? 0 : rng.between(-cfg.height, cfg.height);
  return Rational(Integer(static_cast<long>(m))) * p_power(ctx, e);
}

Rational draw_entry(Rng& rng, const SampleConfig& cfg, const PadicContext& ctx) {
  if (rng.below(6) == 0) return 0;
  return draw_nonzero(rng, cfg, ctx);
}

GL2 random_gl2(Rng& rng, const SampleConfig& cfg, const PadicContext& ctx) {
  for (;;) {
    auto kind = rng.below(100);
    Rational a = draw_nonzero(rng, cfg, ctx);
    Rational b = draw_entry(rng, cfg, ctx);
    Rational c = draw_entry(rng, cfg, ctx);
    Rational d = draw_entry(rng, cfg, ctx);
    if (kind < 5) {
      b = 0;
      c = 0;
      d = a;
    } else if (kind < 15) {
      c = 0;
      d = a;
    } else if (kind < 35) {
      c = 0;
    }
    if (a * d - b * c != 0) return GL2(a, b, c, d);
  }
}

}  // namespace

std::vector<GL2> branch_corpus(const PadicContext& ctx) {
  const Rational p(static_cast<unsigned long>(ctx.p()));
  const Rational g = ctx.mode() == SymbolMode::Dyadic
                         ? Rational(5)
                         : Rational(static_cast<unsigned long>(ctx.residue_generator()));
  return {
      GL2::identity(),
      // scalars
      GL2::scalar(-1), GL2::scalar(p), GL2::scalar(g), GL2::scalar(p * g / 3),
      // companion targets, including w = 0
      GL2(0, 2, 1, 5), GL2(0, -1, 1, 0), GL2(0, p, 1, 1), GL2(0, g, 1, p),
      // c != 0 with odd and even valuation, with and without d = 0
      GL2(1, 2, 3, 4), GL2(1, 0, p, 1), GL2(1, 0, p, 2), GL2(1, 1, p, 0),
      GL2(1, 0, p * p, 1), GL2(2, 1, 1 / p, 1), GL2(0, 1, 1 / (p * p), 0),
      GL2(p, 1, p * p * p, g), GL2(-3, 1 / p, g * p, 7),
      // upper triangular, distinct diagonal
      GL2(2, 7, 0, 5), GL2::diag(1, p), GL2::diag(p, 1), GL2::u(1), GL2::u(p),
      GL2(g, 1 / p, 0, -p),
      // Jordan blocks
      GL2(2, 9, 0, 2), GL2(1, 1, 0, 1), GL2(p, 1, 0, p), GL2(g, p, 0, g), GL2(-1, 1 / p, 0, -1),
  };
}

GL2 sample_gl2(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
               std::uint64_t stream) {
  if (stream == 0) {
    auto corpus = branch_corpus(ctx);
    if (i < corpus.size()) return corpus[i];
  }
  Rng rng = trial_rng(cfg, ctx, i, stream);
  return random_gl2(rng, cfg, ctx);
}

Rational sample_rational(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
                         std::uint64_t stream) {
  Rng rng = trial_rng(cfg, ctx, i, stream + 1000);
  return draw_nonzero(rng, cfg, ctx);
}

Mu sample_mu(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
             std::uint64_t stream) {
  Rng rng = trial_rng(cfg, ctx, i, stream + 2000);
  return Mu(static_cast<std::int64_t>(rng.below(ctx.n())), ctx.n());
}

GL2 sample_congruence(const SampleConfig& cfg, const PadicContext& ctx, int lambda,
                      std::uint64_t i, std::uint64_t stream) {
  Rng rng = trial_rng(cfg, ctx, i, stream + 3000);
  auto deep = [&]() -> Rational {
    if (rng.below(5) == 0) return 0;
    std::int64_t m = rng.between(1, cfg.height);
    if (rng.below(2)) m = -m;
    // Denominators prime to p keep the entry p-integral.
    std::int64_t den = 1;
    do {
      den = rng.between(1, cfg.height);
    } while (den % static_cast<std::int64_t>(ctx.p()) == 0);
    Rational r(Integer(static_cast<long>(m)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r * p_power(ctx, lambda + rng.between(0, 2));
  };
  for (;;) {
    Rational a = 1 + deep();
    Rational b = deep();
    Rational c = deep();
    Rational d = 1 + deep();
    if (a * d - b * c != 0) return GL2(a, b, c, d);
  }
}

GL2 sample_centralizer(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i) {
  Rng rng = trial_rng(cfg, ctx, i, 4000);
  Rational a = draw_nonzero(rng, cfg, ctx);
  Rational b = draw_entry(rng, cfg, ctx);
  return GL2(a, b, 0, a);
}

std::vector<Rational> alpha_corpus(const PadicContext& ctx) {
  if (ctx.mode() == SymbolMode::Dyadic) return {1, 2, 5, 10, -1, -2, -5, -10};
  const Rational p(static_cast<unsigned long>(ctx.p()));
  const Rational g(static_cast<unsigned long>(ctx.residue_generator()));
  return {1, p, g, p * g, -1};
}

Rational sample_alpha(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
                      std::uint64_t stream) {
  if (i % 2 == 0) {
    auto corpus = alpha_corpus(ctx);
    return corpus[(i / 2) % corpus.size()];
  }
  return sample_rational(cfg, ctx, i, stream + 500);
}

}  // namespace metacover
