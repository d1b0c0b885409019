#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "metacover/involutions.hpp"

namespace metacover {

enum class CaseTag { Scalar, Companion, DiagonalDistinct, JordanBlock };

const char* to_string(CaseTag tag);

/// Normal form of g under conjugation together with the matrix realizing it.
///   Companion:        target = [[0, -det g], [1, tr g]]
///   DiagonalDistinct: target = diag(a, d), a != d
///   JordanBlock:      target = [[b, 1], [0, b]]
///   Scalar:           target = g, no conjugator
struct CanonicalCase {
  CaseTag tag;
  std::optional<GL2> conjugator;
  GL2 target;
};

/// Lower-left entry nonzero selects Companion; otherwise g is upper
/// triangular and is diagonalized or put in Jordan form. The relation
/// conjugator * g * conjugator^-1 == target is checked before returning.
CanonicalCase classify(const GL2& g);

/// Rescales a conjugator x with x g x^-1 = diag(a, d) by a diagonal t so
/// that y = t x has trivial conjugator_defect. Picks t by the zero pattern
/// of x = [[f, p], [q, r]]:
///   q = 0:         t = diag(1/f, 1/r)
///   q != 0, f = 0: t = diag(1/p, 1/(q d))
///   q != 0, f != 0: t = diag(d/((d - a) f), 1/(q d))
GL2 normalize_diagonal_conjugator(const GL2& x, const GL2& target);

/// A = c(x^-1 t^-1, x) c(x, x^-1 t^-1)^-1 for a conjugator x onto target t.
Mu conjugator_defect(const GL2& x, const GL2& target, const PadicContext& ctx);

/// Element y with sigma((t, 1)) = c(t^-1, t)^-2 y (t, 1) y^-1 for a target t
/// of the given kind. Throws Error(WrongKind) if t does not have that shape.
MetaElement base_witness(const GL2& target, CaseTag kind, const PadicContext& ctx);

struct WitnessReport {
  CaseTag tag;
  MetaElement z;
  MetaElement lhs;  // the involution side
  MetaElement rhs;  // the conjugation side
  bool verified;
};

/// c(g^-1, g)^-2 eta^-2 for h = (g, eta).
Mu witness_factor(const MetaElement& h, const PadicContext& ctx);

/// Builds z with sigma(h) = c(g^-1, g)^-2 eta^-2 z h z^-1 and checks it.
WitnessReport witness(const MetaElement& h, const PadicContext& ctx);

/// Same identity with sigma_alpha in place of sigma.
WitnessReport witness_alpha(const MetaElement& h, const Rational& alpha, const PadicContext& ctx);

/// z with rho_alpha(h) = z (eta^2 h^-1) z^-1.
WitnessReport rho_witness(const MetaElement& h, const Rational& alpha, const PadicContext& ctx);

struct ObstructionReport {
  Mu eps;
  MetaElement h;
  MetaElement sigma_h;
  std::size_t samples = 0;
  /// lambda_histogram[e] counts centralizer samples whose conjugation factor
  /// lambda had exponent e.
  std::vector<std::size_t> lambda_histogram;
  /// Pairs (x, eta) over the samples with (x, eta) h (x, eta)^-1 == sigma(h).
  std::size_t conjugate_matches = 0;
  bool witness_verified = false;

  bool holds() const {
    return samples > 0 && lambda_histogram.at(0) == samples && conjugate_matches == 0 &&
           !(eps.inv() == eps) && witness_verified;
  }
};

/// For n >= 3, h = ([[1,1],[0,1]], zeta) is not conjugate to sigma(h) by any
/// element over the given centralizer matrices [[a, b], [0, a]]: every
/// conjugation factor is trivial. Throws Error(PreconditionViolated) when
/// n <= 2 or when a sample is not in the centralizer.
ObstructionReport centralizer_obstruction(const PadicContext& ctx,
                                          std::span<const GL2> centralizer);

/// True iff eta -> eta^2 is trivial on Z/n, i.e. iff n = 2.
bool square_map_trivial(std::uint32_t n);

}  // namespace metacover
