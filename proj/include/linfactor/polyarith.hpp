#pragma once

// Number-theoretic functions on F_q[x]: the polynomial analogues of the
// radical, Euler phi, multiplicative order and divisor enumeration.

#include <algorithm>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/ext.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/numtheory.hpp"
#include "linfactor/poly.hpp"

namespace linfactor {

/// N(f) = q^{deg f}.
inline u64 poly_norm(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "norm of zero");
  return checked_pow(f.field()->q(), static_cast<u64>(f.degree()));
}

/// Product of the distinct monic irreducible divisors; rad(constant) = 1.
inline Poly rad(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "rad of zero");
  Poly r = Poly::one(f.field());
  if (f.degree() == 0) return r;
  for (const auto& [p, m] : factor(f).factors) r *= p;
  return r;
}

/// Largest multiplicity of an irreducible factor; nu(constant) = 0.
inline unsigned nu(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "nu of zero");
  if (f.degree() == 0) return 0;
  unsigned best = 0;
  for (const auto& [p, m] : factor(f).factors) best = std::max(best, m);
  return best;
}

/// |(F_q[x]/(f))^*| via Phi(P^s) = N(P)^{s-1} (N(P) - 1); Phi(constant) = 1.
inline u64 phi_q(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "Phi_q of zero");
  u64 phi = 1;
  if (f.degree() == 0) return phi;
  for (const auto& [p, m] : factor(f).factors) {
    const u64 np = poly_norm(p);
    phi = checked_mul(phi, checked_mul(checked_pow(np, m - 1), np - 1));
  }
  return phi;
}

/// Order of x modulo F from a known factorization of F.
inline u64 ord_x_mod(const Factorization& fac) {
  const Field& field = fac.unit.field();
  u64 order = 1;
  unsigned max_mult = 0;
  for (const auto& [p, m] : fac.factors) {
    require(!(p == Poly::x(field)), Errc::DivisibleByX, "ord(x, F) needs gcd(F, x) = 1");
    max_mult = std::max(max_mult, m);
    const auto ctx = ExtField::from_irreducible(p);
    order = checked_lcm(order, mult_order(ExtElement::generator(ctx)));
  }
  // x^s - 1 is squarefree for p not dividing s, so (x^s - 1)^{p^r} = x^{s p^r} - 1
  // is divisible by rad(F)^nu exactly when p^r >= nu(F).
  const u64 p = field->p();
  return checked_mul(order, checked_pow(p, ceil_log(p, max_mult)));
}

/// Least k > 0 with x^k = 1 mod F: lcm of the orders of a root of each
/// irreducible factor, times p^r with r least such that p^r >= nu(F).
/// ord_x_mod(constant) = 1.
inline u64 ord_x_mod(const Poly& F) {
  require(!F.is_zero(), Errc::ZeroPolynomial, "ord(x, 0) is undefined");
  if (F.degree() == 0) return 1;
  require(F[0] != 0, Errc::DivisibleByX, "ord(x, F) needs gcd(F, x) = 1");
  return ord_x_mod(factor(F));
}

/// Number of monic divisors: prod (m_i + 1).
inline u64 count_divisors(const Poly& g) {
  require(!g.is_zero(), Errc::ZeroPolynomial, "divisors of zero");
  u64 w = 1;
  if (g.degree() == 0) return w;
  for (const auto& [p, m] : factor(g).factors) w = checked_mul(w, m + 1);
  return w;
}

inline constexpr u64 kMaxDivisors = 1000000;

/// All monic divisors of g in canonical order.
inline std::vector<Poly> monic_divisors(const Poly& g) {
  require(!g.is_zero(), Errc::ZeroPolynomial, "divisors of zero");
  std::vector<Poly> divs{Poly::one(g.field())};
  if (g.degree() == 0) return divs;
  const auto fac = factor(g);
  u64 w = 1;
  for (const auto& [p, m] : fac.factors) w = checked_mul(w, m + 1);
  require(w <= kMaxDivisors, Errc::SizeExceeded, "more than 10^6 monic divisors");
  for (const auto& [p, m] : fac.factors) {
    const std::size_t base = divs.size();
    Poly pk = Poly::one(g.field());
    for (unsigned i = 1; i <= m; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace linfactor
