#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// deliberately naive so that it shares no code path with the library
// algorithm it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "linfactor/linfactor.hpp"

namespace oracle {

using namespace linfactor;

/// Every monic polynomial of exact degree d, in code order of the lower coefficients.
inline std::vector<Poly> monic_of_degree(const Field& field, unsigned d) {
  const u64 q = field->q();
  const u64 total = checked_pow(q, d);
  std::vector<Poly> out;
  out.reserve(total);
  for (u64 code = 0; code < total; ++code) {
    std::vector<FiniteField::Code> c(d + 1, 0);
    u64 v = code;
    for (unsigned i = 0; i < d; ++i, v /= q) c[i] = static_cast<FiniteField::Code>(v % q);
    c[d] = 1;
    out.emplace_back(field, std::move(c));
  }
  return out;
}

inline std::vector<Poly> monic_up_to(const Field& field, unsigned max_degree, unsigned min_degree = 0) {
  std::vector<Poly> out;
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    auto part = monic_of_degree(field, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Irreducibility by trial division with every monic polynomial of degree <= n/2.
inline bool irreducible_by_trial_division(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    for (const Poly& t : monic_of_degree(f.field(), static_cast<unsigned>(d))) {
      if ((f % t).is_zero()) return false;
    }
  }
  return true;
}

inline std::vector<Poly> irreducibles_up_to(const Field& field, unsigned max_degree) {
  std::vector<Poly> out;
  for (const Poly& f : monic_up_to(field, max_degree, 1)) {
    if (irreducible_by_trial_division(f)) out.push_back(f);
  }
  return out;
}

/// Least k > 0 with x^k = 1 mod F by stepping through powers of x.
inline u64 ord_x_by_search(const Poly& F) {
  if (F.degree() == 0) return 1;
  const Poly x = Poly::x(F.field());
  const Poly one = Poly::one(F.field());
  Poly acc = x % F;
  for (u64 k = 1;; ++k) {
    if (acc == one) return k;
    acc = (acc * x) % F;
  }
}

/// Units of F_q[x]/(f): count residues of degree < deg f coprime to f.
inline u64 phi_by_count(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return 1;
  u64 count = 0;
  const Field& field = f.field();
  const u64 q = field->q();
  const u64 total = checked_pow(q, static_cast<u64>(n));
  for (u64 code = 1; code < total; ++code) {
    std::vector<FiniteField::Code> c(static_cast<std::size_t>(n), 0);
    u64 v = code;
    for (int i = 0; i < n; ++i, v /= q) c[static_cast<std::size_t>(i)] = static_cast<FiniteField::Code>(v % q);
    if (gcd(Poly(field, std::move(c)), f).degree() == 0) ++count;
  }
  return count;
}

inline u64 euler_phi_by_count(u64 n) {
  u64 c = 0;
  for (u64 i = 1; i <= n; ++i) {
    u64 a = i, b = n;
    while (b) {
      const u64 t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++c;
  }
  return c;
}

inline Poly random_poly(const Field& field, unsigned degree, std::mt19937_64& rng, bool monic = true) {
  std::uniform_int_distribution<FiniteField::Code> coeff(0, field->q() - 1);
  std::vector<FiniteField::Code> c(degree + 1);
  for (auto& x : c) x = coeff(rng);
  if (monic) c[degree] = 1;
  while (c[degree] == 0) c[degree] = coeff(rng);
  return Poly(field, std::move(c));
}

inline ExtElement random_element(const ExtContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<FiniteField::Code> coeff(0, ctx->base()->q() - 1);
  std::vector<FiniteField::Code> c(ctx->degree());
  for (auto& x : c) x = coeff(rng);
  return ExtElement(ctx, Poly(ctx->base(), std::move(c)));
}

/// Irreducible monic polynomial of the given degree, by rejection sampling.
inline Poly random_irreducible(const Field& field, unsigned degree, std::mt19937_64& rng) {
  while (true) {
    Poly f = random_poly(field, degree, rng);
    if (is_irreducible(f)) return f;
  }
}

}  // namespace oracle
