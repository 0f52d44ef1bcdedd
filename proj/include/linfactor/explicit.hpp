#pragma once

// Explicit factorization of f(x^q - x) into the q shifts g(x + a) of one
// irreducible g, for irreducible f of degree n with zero trace and p not
// dividing n, plus the closed forms for quadratics and char-2 cubics.

#include <algorithm>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/ext.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/linearized.hpp"
#include "linfactor/poly.hpp"

namespace linfactor {

struct ShiftFactorization {
  Poly g0;
  /// g0(x + a) for a = 0, 1, ..., q - 1 in code order.
  std::vector<Poly> shifts;
};

namespace detail {

inline Poly admissible_f(const Poly& f) {
  require(f.degree() >= 1, Errc::NotIrreducible, "f must be irreducible, got a constant");
  const Poly fm = f.monic();
  const u64 n = static_cast<u64>(fm.degree());
  require(fm[n - 1] == 0, Errc::TraceNonzero, "the coefficient of x^(n-1) in f must be zero");
  require(n % fm.field()->p() != 0, Errc::DegreeDivisibleByP, "deg f must not be divisible by p");
  return fm;
}

}  // namespace detail

/// beta = -(1/n) sum_{i=1}^{n-1} i alpha^{q^{n-1-i}} for alpha = z in F_q[z]/(f),
/// a root of f(x^q - x).
inline ExtElement beta_from_alpha(const Poly& f) {
  const Poly fm = detail::admissible_f(f);
  const ExtContext ctx = ExtField::make(fm);
  const FiniteField& F = *fm.field();
  const u64 n = static_cast<u64>(fm.degree());
  const ExtElement alpha = ExtElement::generator(ctx);

  ExtElement sum = ExtElement::zero(ctx);
  ExtElement conj = alpha;  // alpha^{q^{n-1-i}} walking i downward from n-1
  for (u64 i = n - 1; i >= 1; --i) {
    sum += conj.scaled(F.from_int(static_cast<std::int64_t>(i % F.p())));
    conj = frobenius(conj, 1);
  }
  const auto minus_inv_n = F.neg(F.inv(F.from_int(static_cast<std::int64_t>(n % F.p()))));
  const ExtElement beta = sum.scaled(minus_inv_n);
  check_internal(frobenius(beta, 1) - beta == alpha, "beta^q - beta != alpha");
  return beta;
}

/// Product of (x - b^{q^i}) over the Frobenius orbit of b.
inline Poly minimal_polynomial(const ExtElement& b) {
  const ExtContext& ctx = b.context();
  const Field& field = ctx->base();
  std::vector<ExtElement> coeffs{ExtElement::one(ctx)};  // little-endian in x
  ExtElement c = b;
  do {
    // multiply by (x - c)
    std::vector<ExtElement> next(coeffs.size() + 1, ExtElement::zero(ctx));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += -(coeffs[i] * c);
    }
    coeffs = std::move(next);
    c = frobenius(c, 1);
  } while (!(c == b));

  std::vector<FiniteField::Code> out;
  for (const auto& e : coeffs) {
    check_internal(e.in_base_field(), "minimal polynomial coefficient outside F_q");
    out.push_back(e.value()[0]);
  }
  return Poly(field, std::move(out));
}

inline ShiftFactorization factor_f_xq_minus_x(const Poly& f) {
  const Poly fm = detail::admissible_f(f);
  const Field& field = fm.field();
  const Poly g0 = minimal_polynomial(beta_from_alpha(fm));
  check_internal(g0.degree() == fm.degree(), "minimal polynomial of beta has the wrong degree");

  ShiftFactorization out{g0, {}};
  Poly product = Poly::one(field);
  for (FiniteField::Code a = 0; a < field->q(); ++a) {
    out.shifts.push_back(g0.shift(a));
    product *= out.shifts.back();
  }
  check_internal(product == compose_f_Lg(fm, Poly::from_ints(field, {-1, 1})), "product of shifts != f(x^q - x)");
  std::vector<Poly> sorted = out.shifts;
  std::sort(sorted.begin(), sorted.end());
  check_internal(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "two shifts coincide");
  return out;
}

namespace detail {

inline void require_same_shifts(const ShiftFactorization& closed, const ShiftFactorization& general) {
  check_internal(closed.g0 == general.g0 && closed.shifts == general.shifts,
                 "closed form disagrees with the general shift factorization");
}

}  // namespace detail

/// f = x^2 - a for a nonsquare a, p odd: f(x^q - x) = prod_c (x^2 + 2cx + c^2 - a/4).
inline ShiftFactorization closed_form_quadratic(const FieldElement& a) {
  const Field& field = a.field();
  const FiniteField& F = *field;
  require(F.p() != 2, Errc::EvenCharacteristic, "the quadratic closed form needs odd characteristic");
  require(!a.is_zero() && F.pow(a.code(), (F.q() - 1) / 2) == F.neg(1), Errc::NotANonsquare,
          "a must be a nonsquare in F_q");
  const auto a4 = F.div(a.code(), F.from_int(4));
  ShiftFactorization out{Poly(field, {F.neg(a4), 0, 1}), {}};
  for (FiniteField::Code c = 0; c < F.q(); ++c) {
    const auto c0 = F.sub(F.mul(c, c), a4);
    const auto c1 = F.add(c, c);
    out.shifts.push_back(Poly(field, {c0, c1, 1}));
  }
  detail::require_same_shifts(out, factor_f_xq_minus_x(Poly(field, {F.neg(a.code()), 0, 1})));
  return out;
}

/// f = x^3 + a x + b irreducible, p = 2: the shifts are
/// x^3 + c x^2 + (c^2 + a) x + c^3 + a c + b and g0 = f.
inline ShiftFactorization closed_form_cubic_char2(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field(), b.field());
  const Field& field = a.field();
  const FiniteField& F = *field;
  require(F.p() == 2, Errc::OddCharacteristic, "the cubic closed form needs characteristic 2");
  const Poly f(field, {b.code(), a.code(), 0, 1});
  require(is_irreducible(f), Errc::NotIrreducible, "x^3 + a x + b must be irreducible");
  ShiftFactorization out{f, {}};
  for (FiniteField::Code c = 0; c < F.q(); ++c) {
    const auto c2 = F.mul(c, c);
    const auto c0 = F.add(F.add(F.mul(c2, c), F.mul(a.code(), c)), b.code());
    out.shifts.push_back(Poly(field, {c0, F.add(c2, a.code()), c, 1}));
  }
  detail::require_same_shifts(out, factor_f_xq_minus_x(f));
  return out;
}

}  // namespace linfactor
