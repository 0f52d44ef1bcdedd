#pragma once

// q-associates L_g = sum g_i x^{q^i}, their evaluation on F_{q^n}, the
// F_q-order of an element, and the composed polynomial f(L_g(x)).

#include <string>
#include <utility>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/ext.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/poly.hpp"
#include "linfactor/poly_text.hpp"

namespace linfactor {

/// Linearized polynomial stored through its conventional q-associate g.
class LinearizedPoly {
 public:
  explicit LinearizedPoly(Poly g) : g_(std::move(g)) {}

  const Poly& conventional() const noexcept { return g_; }

  /// Dense form; degree q^{deg g}. SizeExceeded past max_coeffs().
  Poly materialize() const {
    const Field& field = g_.field();
    if (g_.is_zero()) return Poly(field);
    const u64 q = field->q();
    u128 top = 1;
    for (int i = 0; i < g_.degree(); ++i) {
      top *= q;
      require(top < max_coeffs(), Errc::SizeExceeded,
              "L_g has degree q^" + std::to_string(g_.degree()) + ", beyond LINFACTOR_MAX_COEFFS");
    }
    std::vector<FiniteField::Code> v(static_cast<std::size_t>(top) + 1, 0);
    u64 e = 1;
    for (std::size_t i = 0; i < g_.coeffs().size(); ++i, e *= q) v[e] = g_.coeffs()[i];
    return Poly(field, std::move(v));
  }

 private:
  Poly g_;
};

inline LinearizedPoly q_associate(const Poly& g) { return LinearizedPoly(g); }

inline Poly materialize(const LinearizedPoly& L) { return L.materialize(); }

/// L_g(a) = sum g_i a^{q^i}.
inline ExtElement eval_linearized(const Poly& g, const ExtElement& a) {
  require_same_field(g.field(), a.context()->base());
  ExtElement acc = ExtElement::zero(a.context());
  ExtElement conj = a;
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    if (i > 0) conj = frobenius(conj, 1);
    if (g.coeffs()[i] != 0) acc += conj.scaled(g.coeffs()[i]);
  }
  return acc;
}

/// Degree of a over F_q: least d >= 1 with a^{q^d} = a.
inline u64 element_degree(const ExtElement& a) {
  u64 d = 1;
  ExtElement c = frobenius(a, 1);
  while (!(c == a)) {
    c = frobenius(c, 1);
    ++d;
  }
  return d;
}

/// F_q-order of an element: the monic generator of {g : L_g(a) = 0}.
class FqOrder {
 public:
  explicit FqOrder(Poly h) : h_(std::move(h)) {}
  const Poly& poly() const noexcept { return h_; }
  friend bool operator==(const FqOrder& a, const FqOrder& b) { return a.h_ == b.h_; }

 private:
  Poly h_;
};

/// Starts from x^d - 1 (d the degree of a) and removes irreducible factors
/// while the quotient still annihilates a.
inline FqOrder fq_order(const ExtElement& a) {
  const Field& field = a.context()->base();
  if (a.is_zero()) return FqOrder(Poly::one(field));
  const u64 d = element_degree(a);
  // conjugates a^{q^i}, i < d, reused by every evaluation below
  std::vector<ExtElement> orbit{a};
  for (u64 i = 1; i < d; ++i) orbit.push_back(frobenius(orbit.back(), 1));
  auto annihilates = [&](const Poly& g) {
    ExtElement acc = ExtElement::zero(a.context());
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
      if (g.coeffs()[i] != 0) acc += orbit[i % d].scaled(g.coeffs()[i]);
    }
    return acc.is_zero();
  };
  Poly h = Poly::x_pow_minus_one(field, d);
  for (const auto& [phi, mult] : factor(h).factors) {
    for (unsigned i = 0; i < mult; ++i) {
      Poly reduced = h / phi;
      if (!annihilates(reduced)) break;
      h = std::move(reduced);
    }
  }
  return FqOrder(h.monic());
}

/// g = x^s g0 with g0(0) != 0.
struct StrippedG {
  Poly g0;
  unsigned s = 0;
};

inline StrippedG strip_x_power(const Poly& g) {
  require(!g.is_zero(), Errc::ZeroPolynomial, "g must be nonzero");
  unsigned s = 0;
  while (g[s] == 0) ++s;
  std::vector<FiniteField::Code> v(g.coeffs().begin() + s, g.coeffs().end());
  return {Poly(g.field(), std::move(v)), s};
}

/// f(L_g(x)) by Horner's rule on the materialized L_g.
inline Poly compose_f_Lg(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  require(f.degree() >= 1, Errc::ConstantPolynomial, "compose_f_Lg needs nonconstant f");
  require(!g.is_zero(), Errc::ZeroPolynomial, "compose_f_Lg needs nonzero g");
  u128 total = static_cast<u128>(f.degree());
  for (int i = 0; i < g.degree() && total <= max_coeffs(); ++i) total *= f.field()->q();
  require(total <= max_coeffs(), Errc::SizeExceeded, "deg(f) * q^deg(g) exceeds LINFACTOR_MAX_COEFFS");
  const Poly L = q_associate(g).materialize();
  Poly acc(f.field());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * L + Poly::constant(f.field(), f.coeffs()[i]);
  return acc;
}

}  // namespace linfactor
