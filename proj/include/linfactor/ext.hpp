#pragma once

// Elements of F_{q^n} = F_q[z]/(f) for an irreducible f of degree n.

#include <memory>
#include <string>

#include "linfactor/error.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/numtheory.hpp"
#include "linfactor/poly.hpp"

namespace linfactor {

class ExtField {
 public:
  /// Checks irreducibility of `modulus` (NotIrreducible otherwise); stores it monic.
  static std::shared_ptr<const ExtField> make(const Poly& modulus) {
    require(modulus.degree() >= 1, Errc::ConstantPolynomial, "extension modulus must be nonconstant");
    require(is_irreducible(modulus), Errc::NotIrreducible, "extension modulus is reducible");
    return from_irreducible(modulus);
  }

  /// Skips the irreducibility check; for moduli already certified (e.g. factor() output).
  static std::shared_ptr<const ExtField> from_irreducible(const Poly& modulus) {
    return std::shared_ptr<const ExtField>(new ExtField(modulus.monic()));
  }

  const Poly& modulus() const noexcept { return modulus_; }
  const Field& base() const noexcept { return modulus_.field(); }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(modulus_.degree()); }
  const FrobeniusMap& frobenius_map() const noexcept { return frob_; }

  bool same_as(const ExtField& o) const { return this == &o || modulus_ == o.modulus_; }

 private:
  explicit ExtField(Poly modulus) : modulus_(std::move(modulus)), frob_(modulus_) {}

  Poly modulus_;
  FrobeniusMap frob_;
};

using ExtContext = std::shared_ptr<const ExtField>;

class ExtElement {
 public:
  ExtElement(ExtContext ctx, const Poly& value) : ctx_(std::move(ctx)), v_(value % ctx_->modulus()) {
    require_same_field(value.field(), ctx_->base());
  }

  static ExtElement zero(const ExtContext& ctx) { return {ctx, Poly(ctx->base())}; }
  static ExtElement one(const ExtContext& ctx) { return {ctx, Poly::one(ctx->base())}; }
  /// The class of z, a root of the defining polynomial.
  static ExtElement generator(const ExtContext& ctx) { return {ctx, Poly::x(ctx->base())}; }
  static ExtElement constant(const ExtContext& ctx, FiniteField::Code c) { return {ctx, Poly::constant(ctx->base(), c)}; }

  const ExtContext& context() const noexcept { return ctx_; }
  /// Canonical representative of degree < n, as a polynomial in z.
  const Poly& value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  bool is_one() const noexcept { return v_.is_one(); }
  /// True when the element lies in the base field F_q.
  bool in_base_field() const noexcept { return v_.degree() <= 0; }

  ExtElement scaled(FiniteField::Code c) const { return {ctx_, v_.scaled(c)}; }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.ctx_, a.v_ + b.v_, Reduced{}};
  }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.ctx_, a.v_ - b.v_, Reduced{}};
  }
  ExtElement operator-() const { return {ctx_, -v_, Reduced{}}; }
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    a.check(b);
    return {a.ctx_, mulmod(a.v_, b.v_, a.ctx_->modulus()), Reduced{}};
  }
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  /// Inverse by the extended Euclidean algorithm on polynomials in z.
  ExtElement inverse() const {
    require(!is_zero(), Errc::DivisionByZero, "inverse of zero in F_{q^n}");
    Poly r0 = ctx_->modulus(), r1 = v_;
    Poly s0(ctx_->base()), s1 = Poly::one(ctx_->base());
    while (!r1.is_zero()) {
      auto [quo, rem] = divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      Poly s2 = s0 - quo * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    check_internal(r0.degree() == 0, "extension modulus shares a factor with the element");
    return {ctx_, s0.scaled(ctx_->base()->inv(r0[0]))};
  }

  friend ExtElement operator/(const ExtElement& a, const ExtElement& b) { return a * b.inverse(); }

  ExtElement pow(u64 e) const { return {ctx_, powmod(v_, e, ctx_->modulus()), Reduced{}}; }

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.v_ == b.v_ && a.ctx_->same_as(*b.ctx_);
  }

 private:
  struct Reduced {};
  ExtElement(ExtContext ctx, Poly value, Reduced) : ctx_(std::move(ctx)), v_(std::move(value)) {}

  void check(const ExtElement& o) const {
    require(ctx_->same_as(*o.ctx_), Errc::MixedFields, "elements of different extensions");
  }

  ExtContext ctx_;
  Poly v_;
};

/// a^{q^i}. One step is the q-power map, applied as the precomputed linear
/// map of the context; a^{q^n} = a for a context of degree n.
inline ExtElement frobenius(const ExtElement& a, u64 i) {
  const auto& ctx = a.context();
  const u64 n = ctx->degree();
  i %= n;
  if (i == 0 || a.in_base_field()) return a;
  return ExtElement(ctx, ctx->frobenius_map().apply(a.value(), i));
}

/// q^n - 1 for the context of `a`; Overflow when it does not fit in 64 bits.
inline u64 ext_group_order(const ExtContext& ctx) {
  const u64 qn = checked_pow(ctx->base()->q(), ctx->degree());
  return qn - 1;
}

/// Multiplicative order: strip prime factors of q^n - 1 while the power stays 1.
inline u64 mult_order(const ExtElement& a) {
  require(!a.is_zero(), Errc::ZeroElement, "multiplicative order of zero");
  u64 order = ext_group_order(a.context());
  for (auto [r, e] : integer_factor(order)) {
    for (unsigned i = 0; i < e && a.pow(order / r).is_one(); ++i) order /= r;
  }
  return order;
}

}  // namespace linfactor
