#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/field.hpp"

namespace linfactor {

/// Dense univariate polynomial over a FiniteField, little-endian, with no
/// trailing zero coefficients. The zero polynomial has empty coeffs and
/// degree kNegInf.
class Poly {
 public:
  using Code = FiniteField::Code;
  static constexpr int kNegInf = INT_MIN;

  explicit Poly(Field field) : field_(std::move(field)) {}

  Poly(Field field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Code c : c_) require(c < field_->q(), Errc::PreconditionViolated, "coefficient code out of range");
    trim();
  }

  /// Little-endian integer coefficients reduced into the prime subfield.
  static Poly from_ints(Field field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Code> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field->from_int(v));
    return Poly(std::move(field), std::move(c));
  }

  static Poly constant(Field field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }
  static Poly one(Field field) { return constant(std::move(field), 1); }
  static Poly x(Field field) { return Poly(std::move(field), std::vector<Code>{0, 1}); }

  static Poly monomial(Field field, Code c, std::size_t exponent) {
    std::vector<Code> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(std::move(field), std::move(v));
  }

  /// x^n - 1.
  static Poly x_pow_minus_one(Field field, std::size_t n) {
    std::vector<Code> v(n + 1, 0);
    v[n] = 1;
    v[0] = field->add(v[0], field->neg(1));
    return Poly(std::move(field), std::move(v));
  }

  const Field& field() const noexcept { return field_; }
  const std::vector<Code>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  Code operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  FieldElement coeff(std::size_t i) const { return {field_, (*this)[i]}; }

  /// Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(field_->inv(c_.back()));
  }

  Poly scaled(Code s) const {
    if (s == 0) return Poly(field_);
    std::vector<Code> v(c_);
    for (auto& c : v) c = field_->mul(c, s);
    return Poly(field_, std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Code> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(v));
  }

  FieldElement eval(const FieldElement& at) const {
    require_same_field(field_, at.field());
    Code acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, at.code()), c_[i]);
    return {field_, acc};
  }

  /// p(x + a) by Horner's rule.
  Poly shift(Code a) const {
    std::vector<Code> r;
    for (std::size_t i = c_.size(); i-- > 0;) {
      // r <- r * (x + a) + c_i
      r.push_back(0);
      for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = field_->add(r[j - 1], field_->mul(r[j], a));
      r[0] = field_->add(field_->mul(r[0], a), c_[i]);
    }
    return Poly(field_, std::move(r));
  }

  /// p(x^m).
  Poly substitute_power(std::size_t m) const {
    require(m >= 1, Errc::PreconditionViolated, "substitute_power requires m >= 1");
    if (c_.empty()) return *this;
    std::vector<Code> v((c_.size() - 1) * m + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
    return Poly(field_, std::move(v));
  }

  Poly operator-() const {
    std::vector<Code> v(c_);
    for (auto& c : v) c = field_->neg(c);
    return Poly(field_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const auto& F = *a.field_;
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a[i], b[i]);
    return Poly(a.field_, std::move(v), Trusted{});
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const auto& F = *a.field_;
    std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a[i], b[i]);
    return Poly(a.field_, std::move(v), Trusted{});
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    return Poly(a.field_, mul_kernel(*a.field_, a.c_, b.c_), Trusted{});
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    if (a.c_.size() < b.c_.size()) return {Poly(a.field_), a};
    std::vector<Code> quo, rem;
    divrem_kernel(*a.field_, a.c_, b.c_, &quo, rem);
    return {Poly(a.field_, std::move(quo), Trusted{}), Poly(a.field_, std::move(rem), Trusted{})};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

  friend Poly operator%(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    if (a.c_.size() < b.c_.size()) return a;
    std::vector<Code> rem;
    divrem_kernel(*a.field_, a.c_, b.c_, nullptr, rem);
    return Poly(a.field_, std::move(rem), Trusted{});
  }

  bool divides(const Poly& other) const { return (other % *this).is_zero(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_ && same_field(a.field_, b.field_); }

  /// Canonical order: by degree, then coefficients compared from the leading
  /// term downwards by element code.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  // Arithmetic kernels on raw coefficient vectors; exposed for FrobeniusMap.
  static std::vector<Code> mul_kernel(const FiniteField& F, std::span<const Code> a, std::span<const Code> b) {
    std::vector<Code> out(a.size() + b.size() - 1);
    if (F.is_prime_field()) {
      const u64 p = F.p();
      // delayed reduction: each slot accumulates at most min(|a|,|b|) products < p^2
      const u64 budget = std::numeric_limits<u64>::max() / ((p - 1) * (p - 1) + 1);
      std::vector<u64> acc(out.size(), 0);
      u64 used = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const u64 ai = a[i];
        if (ai == 0) continue;
        if (++used >= budget) {
          for (auto& v : acc) v %= p;
          used = 1;
        }
        u64* dst = acc.data() + i;
        for (std::size_t j = 0; j < b.size(); ++j) dst[j] += ai * b[j];
      }
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Code>(acc[i] % p);
    } else {
      std::fill(out.begin(), out.end(), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
      }
    }
    return out;
  }

  /// rem <- a mod b (untrimmed-safe: result is trimmed); quo optional.
  static void divrem_kernel(const FiniteField& F, std::span<const Code> a, std::span<const Code> b, std::vector<Code>* quo,
                            std::vector<Code>& rem) {
    const std::size_t db = b.size() - 1;
    const Code inv_lead = F.inv(b.back());
    if (quo) quo->assign(a.size() - db, 0);
    if (F.is_prime_field()) {
      const u64 p = F.p();
      const u64 budget = std::numeric_limits<u64>::max() / ((p - 1) * (p - 1) + p);
      std::vector<u64> r(a.begin(), a.end());
      u64 used = 0;
      for (std::size_t i = a.size(); i-- > db;) {
        const u64 top = r[i] % p;
        if (top == 0) continue;
        const u64 c = top * inv_lead % p;
        if (quo) (*quo)[i - db] = static_cast<Code>(c);
        const u64 negc = p - c;
        if (++used >= budget) {
          for (std::size_t j = 0; j < i; ++j) r[j] %= p;
          used = 1;
        }
        u64* dst = r.data() + (i - db);
        for (std::size_t j = 0; j < db; ++j) dst[j] += negc * b[j];
        r[i] = 0;
      }
      rem.resize(db);
      for (std::size_t j = 0; j < db; ++j) rem[j] = static_cast<Code>(r[j] % p);
    } else {
      std::vector<Code> r(a.begin(), a.end());
      for (std::size_t i = a.size(); i-- > db;) {
        const Code top = r[i];
        if (top == 0) continue;
        const Code c = F.mul(top, inv_lead);
        if (quo) (*quo)[i - db] = c;
        const Code negc = F.neg(c);
        for (std::size_t j = 0; j < db; ++j) r[i - db + j] = F.add(r[i - db + j], F.mul(negc, b[j]));
        r[i] = 0;
      }
      r.resize(db);
      rem = std::move(r);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (quo) {
      while (!quo->empty() && quo->back() == 0) quo->pop_back();
    }
  }

 private:
  struct Trusted {};
  Poly(Field field, std::vector<Code> coeffs, Trusted) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field field_;
  std::vector<Code> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  require_same_field(a.field(), b.field());
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic lcm; zero if either argument is zero.
inline Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return (a / gcd(a, b) * b).monic();
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, u64 e, const Poly& m) {
  Poly result = Poly::one(base.field()) % m;
  base = base % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return result;
}

inline Poly pow(Poly base, u64 e) {
  Poly result = Poly::one(base.field());
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

/// The q-power map h -> h^q mod m as a precomputed F_q-linear map.
///
/// Column j holds x^{qj} mod m, so h(x)^q = sum_j h_j x^{qj} (coefficients
/// of h lie in F_q and are fixed by the q-power).
class FrobeniusMap {
 public:
  explicit FrobeniusMap(Poly modulus) : modulus_(std::move(modulus)) {
    require(modulus_.degree() >= 1, Errc::ConstantPolynomial, "FrobeniusMap needs a nonconstant modulus");
    const Field& field = modulus_.field();
    const std::size_t n = static_cast<std::size_t>(modulus_.degree());
    const u64 q = field->q();
    cols_.reserve(n);
    Poly col = Poly::one(field);
    if (q <= 2 * n + 2) {
      // multiply by x q times per column; each step is a shift plus one reduction row
      const Poly mon = modulus_.monic();
      for (std::size_t j = 0; j < n; ++j) {
        cols_.push_back(col);
        std::vector<Code> v(col.coeffs());
        for (u64 s = 0; s < q; ++s) times_x_mod(*field, v, mon.coeffs());
        col = Poly(field, std::move(v));
      }
    } else {
      const Poly xq = powmod(Poly::x(field), q, modulus_);
      for (std::size_t j = 0; j < n; ++j) {
        cols_.push_back(col);
        col = mulmod(col, xq, modulus_);
      }
    }
  }

  const Poly& modulus() const noexcept { return modulus_; }

  /// h^q mod modulus.
  Poly apply(const Poly& h) const {
    const Poly r = h.degree() >= modulus_.degree() ? h % modulus_ : h;
    const FiniteField& F = *modulus_.field();
    const std::size_t n = static_cast<std::size_t>(modulus_.degree());
    std::vector<Code> out(n, 0);
    if (F.is_prime_field()) {
      const u64 p = F.p();
      const u64 budget = std::numeric_limits<u64>::max() / ((p - 1) * (p - 1) + 1);
      std::vector<u64> acc(n, 0);
      u64 used = 0;
      for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
        const u64 hj = r.coeffs()[j];
        if (hj == 0) continue;
        if (++used >= budget) {
          for (auto& v : acc) v %= p;
          used = 1;
        }
        const auto& col = cols_[j].coeffs();
        for (std::size_t i = 0; i < col.size(); ++i) acc[i] += hj * col[i];
      }
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Code>(acc[i] % p);
    } else {
      for (std::size_t j = 0; j < r.coeffs().size(); ++j) {
        const Code hj = r.coeffs()[j];
        if (hj == 0) continue;
        const auto& col = cols_[j].coeffs();
        for (std::size_t i = 0; i < col.size(); ++i) out[i] = F.add(out[i], F.mul(hj, col[i]));
      }
    }
    return Poly(modulus_.field(), std::move(out));
  }

  /// h^{q^i} mod modulus.
  Poly apply(Poly h, u64 times) const {
    for (u64 i = 0; i < times; ++i) h = apply(h);
    return h;
  }

 private:
  using Code = FiniteField::Code;

  static void times_x_mod(const FiniteField& F, std::vector<Code>& v, const std::vector<Code>& mon) {
    const std::size_t n = mon.size() - 1;
    v.resize(n, 0);
    const Code top = v[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0) {
      const Code negt = F.neg(top);
      for (std::size_t i = 0; i < n; ++i) v[i] = F.add(v[i], F.mul(negt, mon[i]));
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  Poly modulus_;
  std::vector<Poly> cols_;
};

}  // namespace linfactor
