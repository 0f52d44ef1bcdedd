#pragma once

// Complete factorization over F_q: squarefree decomposition, distinct-degree
// factorization and Cantor-Zassenhaus equal-degree splitting. This is the
// oracle every closed-form prediction in the library is checked against.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/poly.hpp"

namespace linfactor {

struct Factorization {
  FieldElement unit;
  /// Monic irreducible factors with multiplicity, in canonical Poly order.
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly product() const {
    Poly r = Poly::constant(unit.field(), unit.code());
    for (const auto& [f, m] : factors) r *= pow(f, m);
    return r;
  }

  /// Number of irreducible factors counted with multiplicity.
  u64 count_with_multiplicity() const {
    u64 n = 0;
    for (const auto& [f, m] : factors) n += m;
    return n;
  }
};

namespace detail {

// Coefficient-wise p-th root of a polynomial whose exponents are all multiples of p.
inline Poly pth_root_poly(const Poly& f) {
  const FiniteField& F = *f.field();
  const std::size_t p = F.p();
  std::vector<FiniteField::Code> v(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    check_internal(i % p == 0, "p-th root of a polynomial with a non-p-power exponent");
    v[i / p] = F.pth_root(f.coeffs()[i]);
  }
  return Poly(f.field(), std::move(v));
}

inline void squarefree_rec(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_rec(pth_root_poly(f), scale * f.field()->p(), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) squarefree_rec(pth_root_poly(c.monic()), scale * f.field()->p(), out);
}

}  // namespace detail

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime monic
/// squarefree parts with their multiplicities; the product of part^mult is monic(f).
inline std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  detail::squarefree_rec(f.monic(), 1, out);
  return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    out.emplace_back(f.monic(), 1);
    return out;
  }
  const FrobeniusMap frob(f);
  const Poly x = Poly::x(f.field());
  Poly h = x;
  Poly rest = f.monic();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
    h = frob.apply(h);
    Poly g = gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
  return out;
}

/// Splits a monic squarefree f whose irreducible factors all have degree d.
inline std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng) {
  const int n = f.degree();
  if (n <= static_cast<int>(d)) return {f.monic()};
  const Field& field = f.field();
  const FiniteField& F = *field;
  const FrobeniusMap frob(f);
  std::uniform_int_distribution<FiniteField::Code> coeff(0, F.q() - 1);
  for (;;) {
    std::vector<FiniteField::Code> v(static_cast<std::size_t>(n));
    for (auto& c : v) c = coeff(rng);
    const Poly a(field, std::move(v));
    if (a.degree() <= 0) continue;
    Poly split(field);
    if (F.p() == 2) {
      // relative trace to F_q, then absolute trace to F_2
      Poly tr = a, conj = a;
      for (unsigned i = 1; i < d; ++i) {
        conj = frob.apply(conj);
        tr += conj;
      }
      Poly abs = tr, sq = tr;
      for (unsigned j = 1; j < F.k(); ++j) {
        sq = mulmod(sq, sq, f);
        abs += sq;
      }
      split = gcd(f, abs);
    } else {
      // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
      Poly norm = a, conj = a;
      for (unsigned i = 1; i < d; ++i) {
        conj = frob.apply(conj);
        norm = mulmod(norm, conj, f);
      }
      Poly b = powmod(norm, (F.q() - 1) / 2, f);
      split = gcd(f, b - Poly::one(field));
    }
    if (split.degree() > 0 && split.degree() < n) {
      auto left = equal_degree(split, d, rng);
      auto right = equal_degree(f / split, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Complete factorization into monic irreducibles. The seed only drives the
/// equal-degree splitting; the output is sorted, so it does not depend on it.
inline Factorization factor(const Poly& f, std::uint64_t seed = 0) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "factor of zero");
  Factorization result{FieldElement(f.field(), f.leading()), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree(part)) {
      for (auto& irr : equal_degree(block, d, rng)) result.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // squarefree parts are coprime, so equal neighbours cannot occur; merge defensively anyway
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fm : result.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(std::move(fm));
  }
  result.factors = std::move(merged);
  return result;
}

/// Rabin's test: f of degree n is irreducible iff x^{q^n} = x mod f and
/// gcd(f, x^{q^{n/r}} - x) = 1 for each prime r | n.
inline bool is_irreducible(const Poly& f) {
  require(f.degree() >= 1, Errc::ConstantPolynomial, "irreducibility of a constant polynomial");
  const u64 n = static_cast<u64>(f.degree());
  if (n == 1) return true;
  const Poly m = f.monic();
  const FrobeniusMap frob(m);
  const Poly x = Poly::x(f.field());
  const auto primes = integer_factor(n);
  std::vector<u64> checkpoints;
  for (auto [r, e] : primes) checkpoints.push_back(n / r);
  std::sort(checkpoints.begin(), checkpoints.end());
  Poly h = x;
  u64 done = 0;
  for (u64 cp : checkpoints) {
    h = frob.apply(h, cp - done);
    done = cp;
    if (gcd(m, h - x).degree() != 0) return false;
  }
  h = frob.apply(h, n - done);
  return h == x % m;
}

}  // namespace linfactor
