#pragma once

// Text form of field elements and polynomials.
//
// Grammar (whitespace allowed between tokens):
//   expr    := [sign] term { sign term }
//   term    := power { ['*'] power }
//   power   := primary [ '^' integer ]
//   primary := integer | VAR | 't' | '(' expr ')'
// VAR is the polynomial variable (x by default, z for extension elements);
// `t` denotes the generator of F_q over F_p and is only valid when k > 1.
// Integers are reduced mod p.
//
// Printing is canonical: descending exponents, coefficient 1 omitted,
// prime-field digits shown as signed representatives in (-p/2, p/2].

#include <cctype>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>

#include "linfactor/error.hpp"
#include "linfactor/field.hpp"
#include "linfactor/poly.hpp"

namespace linfactor {

/// Upper bound on polynomial sizes built from text or by composition;
/// LINFACTOR_MAX_COEFFS overrides the default of 10^5.
inline u64 max_coeffs() {
  if (const char* env = std::getenv("LINFACTOR_MAX_COEFFS")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 100000;
}

namespace detail {

inline std::int64_t signed_rep(std::uint32_t v, std::uint32_t p) {
  return v > p / 2 ? static_cast<std::int64_t>(v) - p : static_cast<std::int64_t>(v);
}

// Terms (sign, magnitude text) of an element written in the power basis of t.
inline std::vector<std::pair<bool, std::string>> element_terms(const FiniteField& F, FiniteField::Code c) {
  std::vector<std::pair<bool, std::string>> terms;
  auto d = F.digits(c);
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    std::int64_t s = signed_rep(d[i], F.p());
    bool neg = s < 0;
    std::uint64_t mag = static_cast<std::uint64_t>(neg ? -s : s);
    std::string body;
    if (i == 0) {
      body = std::to_string(mag);
    } else {
      body = (mag == 1 ? "" : std::to_string(mag) + "*") + "t" + (i == 1 ? "" : "^" + std::to_string(i));
    }
    terms.emplace_back(neg, body);
  }
  return terms;
}

inline std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].first)
      out += "-";
    else if (i > 0)
      out += "+";
    out += terms[i].second;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const FieldElement& a) {
  if (a.is_zero()) return "0";
  return detail::join_terms(detail::element_terms(*a.field(), a.code()));
}

inline std::string to_string(const Poly& f, char var = 'x') {
  if (f.is_zero()) return "0";
  const FiniteField& F = *f.field();
  std::string out;
  bool first = true;
  for (std::size_t e = f.coeffs().size(); e-- > 0;) {
    const auto c = f.coeffs()[e];
    if (c == 0) continue;
    std::string mono;
    if (e >= 1) mono = std::string(1, var) + (e == 1 ? "" : "^" + std::to_string(e));
    auto terms = detail::element_terms(F, c);
    if (terms.size() == 1) {
      auto [neg, body] = terms[0];
      if (neg)
        out += "-";
      else if (!first)
        out += "+";
      if (mono.empty())
        out += body;
      else if (body == "1")
        out += mono;
      else
        out += body + "*" + mono;
    } else {
      if (!first) out += "+";
      out += "(" + detail::join_terms(terms) + ")";
      if (!mono.empty()) out += "*" + mono;
    }
    first = false;
  }
  return out;
}

/// Text form of a field, e.g. "p=5" or "p=2,k=2,mod=t^2+t+1".
inline std::string field_spec_string(const FiniteField& F) {
  std::string out = "p=" + std::to_string(F.p());
  if (F.k() > 1) {
    auto prime = std::make_shared<const FiniteField>(F.p());
    std::vector<FiniteField::Code> m(F.modulus().begin(), F.modulus().end());
    out += ",k=" + std::to_string(F.k()) + ",mod=" + to_string(Poly(prime, m), 't');
  }
  return out;
}

inline std::string field_spec_string(const Field& F) { return field_spec_string(*F); }

class PolyParser {
 public:
  PolyParser(std::string_view text, Field field, char var = 'x') : text_(text), field_(std::move(field)), var_(var) {}

  Poly parse() {
    skip_ws();
    if (at_end()) error("empty polynomial");
    Poly result = expr();
    skip_ws();
    if (!at_end()) error(std::string("unexpected character '") + text_[pos_] + "'");
    return result;
  }

 private:
  using Code = FiniteField::Code;

  [[noreturn]] void error(const std::string& what) const { throw ParseError(std::string(text_), pos_, what); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Poly expr() {
    bool negate = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  bool starts_primary() const {
    if (at_end()) return false;
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == 't' || c == '(';
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        acc = acc * power();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    skip_ws();
    const std::size_t start = pos_;
    Poly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent after '^'");
    const std::size_t exp_pos = pos_;
    u64 e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      u64 d = static_cast<u64>(text_[pos_] - '0');
      if (e > (std::numeric_limits<u64>::max() - d) / 10) {
        pos_ = exp_pos;
        error("exponent too large");
      }
      e = e * 10 + d;
      ++pos_;
    }
    if (base.is_constant()) {
      return Poly::constant(field_, field_->pow(base[0], e));
    }
    if (static_cast<u128>(e) * static_cast<u64>(base.degree()) + 1 > max_coeffs()) {
      pos_ = start;
      error("power exceeds the coefficient guardrail (LINFACTOR_MAX_COEFFS)");
    }
    return pow(base, e);
  }

  Poly primary() {
    skip_ws();
    if (at_end()) error("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Code v = 0;
      const u64 p = field_->p();
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = static_cast<Code>((u64{v} * 10 + static_cast<u64>(text_[pos_] - '0')) % p);
        ++pos_;
      }
      return Poly::constant(field_, v);
    }
    if (c == var_) {
      ++pos_;
      return Poly::x(field_);
    }
    if (c == 't') {
      if (field_->k() == 1) error("generator 't' is only available when k > 1");
      ++pos_;
      return Poly::constant(field_, field_->generator());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  char var_;
  std::size_t pos_ = 0;
};

inline Poly parse_poly(std::string_view text, const Field& field, char var = 'x') {
  return PolyParser(text, field, var).parse();
}

/// Parses a constant expression such as `3`, `t+1` or `(t^2+1)*t`.
inline FieldElement parse_element(std::string_view text, const Field& field) {
  Poly p = PolyParser(text, field, '\0').parse();
  return {field, p[0]};
}

}  // namespace linfactor
