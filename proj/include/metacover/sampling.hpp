#pragma once

#include <cstdint>
#include <vector>

#include "metacover/gl2.hpp"
#include "metacover/padic_field.hpp"

namespace metacover {

struct SampleConfig {
  std::uint64_t seed = 42;
  /// Bound on the unit cofactor |m| and on |valuation| of sampled entries.
  int height = 6;
  /// Random samples per suite, on top of the hand-built corpus.
  int trials = 1000;
  std::vector<PadicContext> contexts;
  /// Depth of K_lambda for the splitting suite; 0 means the per-context default.
  int splitting_depth = 0;
};

/// (2,2), (3,2), (5,2), (5,4), (7,3), (13,6).
std::vector<PadicContext> default_contexts();

/// Throws Error(PreconditionViolated) on trials < 1, height < 2, or no contexts.
void validate(const SampleConfig& cfg);

/// splitmix64; every draw is a fixed function of the seed so streams are
/// reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Generator for trial i of a given stream in a given context.
Rng trial_rng(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
              std::uint64_t stream);

/// Matrices that drive every branch of X, s, sigma and classify.
std::vector<GL2> branch_corpus(const PadicContext& ctx);

/// Stream 0 walks branch_corpus() for i < corpus size; everything else is
/// random: entries +-m p^e, rejection-resampled until det != 0.
GL2 sample_gl2(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
               std::uint64_t stream = 0);

/// Nonzero rational +-m p^e.
Rational sample_rational(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
                         std::uint64_t stream);

Mu sample_mu(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
             std::uint64_t stream);

/// Element of K_lambda: I plus entries of valuation >= lambda.
GL2 sample_congruence(const SampleConfig& cfg, const PadicContext& ctx, int lambda,
                      std::uint64_t i, std::uint64_t stream);

/// [[a, b], [0, a]]
GL2 sample_centralizer(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i);

/// One representative per class of F^x / (F^x)^n for the small n used here:
/// {1, p, g, p g, -1} in tame mode, {+-1, +-2, +-5, +-10} in dyadic mode.
std::vector<Rational> alpha_corpus(const PadicContext& ctx);

/// Even trials walk alpha_corpus(), odd trials are random.
Rational sample_alpha(const SampleConfig& cfg, const PadicContext& ctx, std::uint64_t i,
                      std::uint64_t stream);

}  // namespace metacover
