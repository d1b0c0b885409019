#include "metacover/padic_field.hpp"

#include <string>

#include "metacover/error.hpp"

namespace metacover {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  // Prime factors of p - 1.
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 1; g < p; ++g) {
    bool primitive = true;
    for (auto q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 0;  // unreachable for prime p
}

}  // namespace

PadicContext PadicContext::make(std::uint64_t p, std::uint32_t n) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidContext, "p must be prime (p=" + std::to_string(p) + ")");
  }
  if (n < 2) {
    throw Error(ErrorCode::InvalidContext, "n must be at least 2 (n=" + std::to_string(n) + ")");
  }
  if (p > (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::InvalidContext, "p must be below 2^31");
  }
  PadicContext ctx;
  ctx.p_ = p;
  ctx.n_ = n;
  if (p == 2) {
    if (n != 2) {
      throw Error(ErrorCode::InvalidContext,
                  "p=2 supports only n=2 (n=" + std::to_string(n) + ")");
    }
    ctx.mode_ = SymbolMode::Dyadic;
    return ctx;
  }
  if ((p - 1) % n != 0) {
    throw Error(ErrorCode::InvalidContext, "n must divide p-1 (p=" + std::to_string(p) +
                                               ", n=" + std::to_string(n) + ")");
  }
  ctx.mode_ = SymbolMode::Tame;
  ctx.generator_ = smallest_primitive_root(p);
  ctx.zeta_ = pow_mod(ctx.generator_, (p - 1) / n, p);
  ctx.zeta_powers_.resize(n);
  std::uint64_t acc = 1;
  for (std::uint32_t e = 0; e < n; ++e) {
    ctx.zeta_powers_[e] = acc;
    acc = acc * ctx.zeta_ % p;
  }
  return ctx;
}

int PadicContext::log_zeta(std::uint64_t r) const noexcept {
  for (std::size_t e = 0; e < zeta_powers_.size(); ++e) {
    if (zeta_powers_[e] == r) return static_cast<int>(e);
  }
  return -1;
}

Mu::Mu(std::int64_t exp, std::uint32_t order) : order_(order) {
  if (order == 0) throw Error(ErrorCode::PreconditionViolated, "mu_n needs n >= 1");
  auto r = exp % static_cast<std::int64_t>(order);
  if (r < 0) r += order;
  exp_ = static_cast<std::uint32_t>(r);
}

Mu Mu::pow(std::int64_t k) const {
  auto kk = k % static_cast<std::int64_t>(order_);
  return Mu(static_cast<std::int64_t>(exp_) * kk, order_);
}

Mu operator*(const Mu& a, const Mu& b) {
  if (a.order_ != b.order_) {
    throw Error(ErrorCode::PreconditionViolated, "mixing mu_n of different orders");
  }
  return Mu(static_cast<std::int64_t>(a.exp_) + b.exp_, a.order_);
}

std::int64_t valuation(const Rational& a, const PadicContext& ctx) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  Integer prime(static_cast<unsigned long>(ctx.p()));
  Integer rest;
  auto up = mpz_remove(rest.get_mpz_t(), a.get_num_mpz_t(), prime.get_mpz_t());
  auto down = mpz_remove(rest.get_mpz_t(), a.get_den_mpz_t(), prime.get_mpz_t());
  return static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
}

std::uint64_t unit_residue(const Rational& a, unsigned k, const PadicContext& ctx) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "unit residue of zero");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "unit residue needs k >= 1");
  Integer prime(static_cast<unsigned long>(ctx.p()));
  Integer num, den;
  mpz_remove(num.get_mpz_t(), a.get_num_mpz_t(), prime.get_mpz_t());
  mpz_remove(den.get_mpz_t(), a.get_den_mpz_t(), prime.get_mpz_t());
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), prime.get_mpz_t(), k);
  if (!modulus.fits_ulong_p()) {
    throw Error(ErrorCode::PreconditionViolated, "p^k must fit in 64 bits");
  }
  Integer den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer r = num * den_inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r.get_ui();
}

bool is_nth_power(const Rational& a, const PadicContext& ctx) {
  auto v = valuation(a, ctx);
  if (ctx.mode() == SymbolMode::Dyadic) {
    return v % 2 == 0 && unit_residue(a, 3, ctx) == 1;
  }
  if (v % static_cast<std::int64_t>(ctx.n()) != 0) return false;
  auto u = unit_residue(a, 1, ctx);
  return pow_mod(u, (ctx.p() - 1) / ctx.n(), ctx.p()) == 1;
}

}  // namespace metacover
