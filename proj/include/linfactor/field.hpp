#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/numtheory.hpp"

namespace linfactor {

/// The field F_q = F_p[t]/(modulus), q = p^k <= 2^20.
///
/// Elements are passed around as integer codes: the code of
/// c_0 + c_1 t + ... + c_{k-1} t^{k-1} is sum c_i p^i. Codes 0..q-1 therefore
/// enumerate the field as 0, 1, ..., p-1, t, t+1, ..., which is also the
/// canonical element order used for output.
///
/// Extension fields carry discrete log/antilog tables built once in the
/// constructor; nothing is mutated afterwards.
class FiniteField {
 public:
  using Code = std::uint32_t;
  static constexpr u64 kMaxOrder = u64{1} << 20;

  /// Prime field F_p. Use make_prime_field() for validated construction.
  explicit FiniteField(std::uint32_t p) : p_(p), k_(1), q_(p) {
    require(p <= kMaxOrder && is_prime(p), Errc::InvalidField, "p=" + std::to_string(p) + " is not a prime <= 2^20");
  }

  /// Extension field with the given monic modulus (little-endian over F_p).
  /// The modulus must be irreducible; make_extension_field() checks that.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    require(p <= kMaxOrder && is_prime(p), Errc::InvalidField, "p=" + std::to_string(p) + " is not a prime <= 2^20");
    require(modulus_.size() >= 2 && modulus_.back() == 1, Errc::InvalidField, "modulus must be monic of degree >= 1");
    k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    u64 q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
      q *= p;
      require(q <= kMaxOrder, Errc::InvalidField, "field order exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    for (auto& c : modulus_) {
      require(c < p, Errc::InvalidField, "modulus coefficient out of range");
    }
    if (k_ == 1) {
      modulus_.clear();
      return;
    }
    pow_p_.resize(k_);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i < k_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
    build_tables();
  }

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }
  /// Little-endian monic modulus over F_p; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  bool same_as(const FiniteField& other) const noexcept {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

  Code add(Code a, Code b) const noexcept {
    if (k_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    Code r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      Code d = (a % p_ + b % p_) % p_;
      r += d * pow_p_[i];
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Code neg(Code a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Code r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      Code d = a % p_;
      r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
      a /= p_;
    }
    return r;
  }

  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

  Code mul(Code a, Code b) const noexcept {
    if (k_ == 1) return static_cast<Code>(u64{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Code inv(Code a) const {
    require(a != 0, Errc::DivisionByZero, "inverse of zero");
    if (k_ == 1) {
      // extended Euclid on integers
      std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
      while (r1 != 0) {
        std::int64_t quo = r0 / r1;
        std::int64_t t = r0 - quo * r1;
        r0 = r1;
        r1 = t;
        t = s0 - quo * s1;
        s0 = s1;
        s1 = t;
      }
      std::int64_t r = s0 % static_cast<std::int64_t>(p_);
      return static_cast<Code>(r < 0 ? r + p_ : r);
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Code div(Code a, Code b) const { return mul(a, inv(b)); }

  Code pow(Code a, u64 e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (k_ > 1) return exp_[static_cast<u64>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
    Code r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  /// The unique b with b^p = a (Frobenius is bijective on F_q).
  Code pth_root(Code a) const noexcept {
    if (k_ == 1) return a;
    return pow(a, q_ / p_);
  }

  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Code>(r < 0 ? r + p_ : r);
  }

  /// The generator t of F_q over F_p (k > 1 only).
  Code generator() const {
    require(k_ > 1, Errc::PreconditionViolated, "prime field has no generator t");
    return p_;
  }

  /// Coefficients of `a` in the power basis 1, t, ..., t^{k-1}.
  std::vector<std::uint32_t> digits(Code a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  Code from_digits(const std::vector<std::uint32_t>& d) const {
    Code r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_ && i < d.size(); ++i) {
      r += (d[i] % p_) * scale;
      scale *= p_;
    }
    return r;
  }

  /// True when the code lies in the prime subfield F_p.
  bool in_prime_field(Code a) const noexcept { return a < p_; }

 private:
  // Schoolbook multiplication of digit vectors reduced by the modulus; only
  // used to build the tables.
  Code slow_mul(Code a, Code b) const {
    auto da = digits(a), db = digits(b);
    std::vector<u64> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p_;
    for (std::size_t i = prod.size(); i-- > k_;) {
      u64 c = prod[i];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j <= k_; ++j) {
        std::size_t idx = i - k_ + j;
        prod[idx] = (prod[idx] + (p_ - c) * modulus_[j]) % p_;
      }
    }
    std::vector<std::uint32_t> r(prod.begin(), prod.begin() + k_);
    return from_digits(r);
  }

  Code slow_pow(Code a, u64 e) const {
    Code r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    const u64 order = q_ - 1;
    const auto primes = integer_factor(order);
    Code gen = 0;
    for (Code cand = 2; cand < q_ && gen == 0; ++cand) {
      if (slow_pow(cand, order) != 1) {
        fail(Errc::InvalidField, "modulus is not irreducible (F_p[t]/(modulus) has zero divisors)");
      }
      bool primitive = true;
      for (auto [r, e] : primes) {
        if (slow_pow(cand, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = cand;
    }
    check_internal(gen != 0, "no primitive element found in F_q");
    log_.assign(q_, 0);
    exp_.assign(2 * order, 0);
    Code v = 1;
    for (u64 i = 0; i < order; ++i) {
      exp_[i] = v;
      exp_[i + order] = v;
      log_[v] = static_cast<Code>(i);
      v = slow_mul(v, gen);
    }
    check_internal(v == 1, "primitive element has wrong order");
  }

  std::uint32_t p_;
  std::uint32_t k_ = 1;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<Code> log_;
  std::vector<Code> exp_;
};

using Field = std::shared_ptr<const FiniteField>;

inline bool same_field(const Field& a, const Field& b) noexcept { return a == b || a->same_as(*b); }

inline void require_same_field(const Field& a, const Field& b) {
  require(same_field(a, b), Errc::MixedFields, "operands belong to different fields");
}

/// An element of F_q bound to its field.
class FieldElement {
 public:
  using Code = FiniteField::Code;

  FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
    require(code_ < field_->q(), Errc::PreconditionViolated, "element code out of range");
  }

  static FieldElement zero(Field f) { return {std::move(f), 0}; }
  static FieldElement one(Field f) { return {std::move(f), 1}; }
  static FieldElement from_int(Field f, std::int64_t v) {
    Code c = f->from_int(v);
    return {std::move(f), c};
  }

  const Field& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }
  /// Coefficients in the power basis of t (length k).
  std::vector<std::uint32_t> coeffs() const { return field_->digits(code_); }

  FieldElement inverse() const { return {field_, field_->inv(code_)}; }
  FieldElement pow(u64 e) const { return {field_, field_->pow(code_, e)}; }
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->add(a.code_, b.code_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->sub(a.code_, b.code_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->mul(a.code_, b.code_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_->div(a.code_, b.code_)};
  }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && same_field(a.field_, b.field_);
  }

 private:
  Field field_;
  Code code_;
};

}  // namespace linfactor
