#pragma once

#include <cstdint>
#include <vector>

#include "metacover/rational.hpp"

namespace metacover {

enum class SymbolMode { Tame, Dyadic };

/// The pair (p, n): the field Q_p and the degree of the cover. Only the
/// regimes where mu_n has exactly n elements and the symbol has a closed
/// form are accepted: p odd with n | p - 1, or p = 2 with n = 2.
class PadicContext {
 public:
  /// Throws Error(InvalidContext) outside the supported regimes.
  static PadicContext make(std::uint64_t p, std::uint32_t n);

  std::uint64_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  SymbolMode mode() const noexcept { return mode_; }

  /// Smallest primitive root mod p; 0 in Dyadic mode.
  std::uint64_t residue_generator() const noexcept { return generator_; }

  /// residue_generator^((p-1)/n) mod p, the image of the abstract generator
  /// of mu_n in the residue field. 0 in Dyadic mode.
  std::uint64_t zeta_residue() const noexcept { return zeta_; }

  /// Exponent e with zeta_residue^e == r (mod p), or -1 if r is not in the
  /// order-n subgroup.
  int log_zeta(std::uint64_t r) const noexcept;

  friend bool operator==(const PadicContext& a, const PadicContext& b) noexcept {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  PadicContext() = default;

  std::uint64_t p_ = 0;
  std::uint32_t n_ = 0;
  SymbolMode mode_ = SymbolMode::Tame;
  std::uint64_t generator_ = 0;
  std::uint64_t zeta_ = 0;
  std::vector<std::uint64_t> zeta_powers_;
};

/// An element of mu_n, held as the exponent of a fixed abstract generator.
class Mu {
 public:
  Mu(std::int64_t exp, std::uint32_t order);

  static Mu one(std::uint32_t order) { return Mu(0, order); }

  std::uint32_t exp() const noexcept { return exp_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_one() const noexcept { return exp_ == 0; }

  Mu inv() const { return Mu(-static_cast<std::int64_t>(exp_), order_); }
  Mu pow(std::int64_t k) const;

  friend Mu operator*(const Mu& a, const Mu& b);
  Mu& operator*=(const Mu& b) { return *this = *this * b; }

  friend bool operator==(const Mu& a, const Mu& b) noexcept = default;

 private:
  std::uint32_t exp_;
  std::uint32_t order_;
};

bool is_prime(std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// v_p(a). Throws Error(ZeroInput) for a = 0.
std::int64_t valuation(const Rational& a, const PadicContext& ctx);

/// Class of a * p^(-v(a)) modulo p^k, k >= 1.
std::uint64_t unit_residue(const Rational& a, unsigned k, const PadicContext& ctx);

bool is_nth_power(const Rational& a, const PadicContext& ctx);

}  // namespace metacover
