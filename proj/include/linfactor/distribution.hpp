#pragma once

// Predicted factor-degree distributions of f(L_g(x)) and f(x^m), a lower
// bound on the number of irreducible factors, and irreducibility criteria.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/ext.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/linearized.hpp"
#include "linfactor/numtheory.hpp"
#include "linfactor/poly.hpp"
#include "linfactor/poly_text.hpp"
#include "linfactor/polyarith.hpp"

namespace linfactor {

/// Either an F_q-order (additive case) or an integer multiplicative order.
using OrderLabel = std::variant<Poly, u64>;

inline std::string to_string(const OrderLabel& label) {
  if (const Poly* p = std::get_if<Poly>(&label)) return to_string(*p);
  return std::to_string(std::get<u64>(label));
}

struct FactorClass {
  OrderLabel order;
  u64 degree = 0;
  u64 count = 0;
};

/// (degree, multiplicity) -> number of distinct irreducible factors.
using Histogram = std::map<std::pair<u64, u64>, u64>;

inline Histogram histogram_of(const Factorization& fac) {
  Histogram h;
  for (const auto& [p, m] : fac.factors) ++h[{static_cast<u64>(p.degree()), m}];
  return h;
}

struct DegreeDistribution {
  std::vector<FactorClass> classes;
  /// deg f * q^{deg g0}, the degree of f(L_{g0}(x)).
  u64 total_degree = 0;
  /// s for g = x^s g0; every factor then appears with multiplicity q^s.
  unsigned frobenius_power = 0;
  /// q of the base field, kept so histogram() can expand q^s.
  u64 q = 0;

  u64 factor_count() const {
    u64 n = 0;
    for (const auto& c : classes) n += c.count;
    return n;
  }

  Histogram histogram() const {
    const u64 mult = checked_pow(q, frobenius_power);
    Histogram h;
    for (const auto& c : classes) {
      if (c.count > 0) h[{c.degree, mult}] += c.count;
    }
    return h;
  }
};

namespace detail {

struct RootData {
  Poly f;  // monic
  unsigned n;
  ExtContext ctx;
  Poly h;  // F_q-order of the class of z in F_q[z]/(f)
};

inline RootData root_data(const Poly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "f must be nonzero");
  require(f.degree() >= 1, Errc::NotIrreducible, "f must be irreducible, got a constant");
  const Poly fm = f.monic();
  const ExtContext ctx = ExtField::make(fm);
  Poly h = fq_order(ExtElement::generator(ctx)).poly();
  return {fm, static_cast<unsigned>(fm.degree()), ctx, std::move(h)};
}

inline u64 exact_div(u64 num, u64 den, const std::string& what) {
  check_internal(den != 0 && num % den == 0, what + ": " + std::to_string(num) + " / " + std::to_string(den) + " is not an integer");
  return num / den;
}

inline void sort_classes(std::vector<FactorClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const FactorClass& a, const FactorClass& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.order.index() != b.order.index()) return a.order.index() < b.order.index();
    if (const Poly* pa = std::get_if<Poly>(&a.order)) return *pa < std::get<Poly>(b.order);
    return std::get<u64>(a.order) < std::get<u64>(b.order);
  });
}

}  // namespace detail

/// g = g1 g2 where gcd(g1, h) = 1 and every irreducible factor of g2 divides h.
/// g2 is monic; the leading coefficient of g stays on g1.
inline std::pair<Poly, Poly> split_g(const Poly& g, const Poly& h) {
  require_same_field(g.field(), h.field());
  require(!g.is_zero() && !h.is_zero(), Errc::ZeroPolynomial, "split_g needs nonzero g and h");
  require(g[0] != 0, Errc::DivisibleByX, "split_g needs gcd(g, x) = 1");
  require(h[0] != 0, Errc::DivisibleByX, "split_g needs gcd(h, x) = 1");
  Poly g1 = g;
  Poly g2 = Poly::one(g.field());
  for (Poly c = gcd(g1, h); c.degree() > 0; c = gcd(g1, h)) {
    g1 = g1 / c;
    g2 *= c;
  }
  return {g1, g2.monic()};
}

/// The distribution of irreducible factors of f(L_g(x)) for irreducible f.
/// One class per monic divisor G of g1, labelled by the F_q-order G g2 h of
/// the roots it contains.
inline DegreeDistribution additive_distribution(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const auto root = detail::root_data(f);
  const StrippedG stripped = strip_x_power(g);
  const Poly g0 = stripped.g0.monic();
  const auto [g1, g2] = split_g(g0, root.h);
  const Field& field = f.field();
  const u64 q = field->q();

  DegreeDistribution dist;
  dist.q = q;
  dist.frobenius_power = stripped.s;
  u128 total = root.n;
  for (int i = 0; i < g0.degree(); ++i) {
    total *= q;
    require(total < (u128{1} << 63), Errc::SizeExceeded, "deg f * q^deg g exceeds 2^63");
  }
  dist.total_degree = static_cast<u64>(total);

  const u64 base = checked_mul(root.n, poly_norm(g2));
  const Poly g2h = g2 * root.h;
  for (const Poly& G : monic_divisors(g1.monic())) {
    Poly label = G * g2h;
    const u64 degree = ord_x_mod(label);
    const u64 count = detail::exact_div(checked_mul(base, phi_q(G)), degree, "factor count for order " + to_string(label));
    dist.classes.push_back({std::move(label), degree, count});
  }
  detail::sort_classes(dist.classes);

  u128 roots = 0;
  for (const auto& c : dist.classes) roots += static_cast<u128>(c.degree) * c.count;
  check_internal(roots == total, "class degrees do not add up to the degree of f(L_g(x))");
  return dist;
}

/// Multiplicative analogue for f(x^m), gcd(m, q) = 1: one class per divisor
/// d of m1 labelled by the order d m2 e of its roots.
inline DegreeDistribution butler_distribution(const Poly& f, u64 m) {
  require(m >= 1, Errc::PreconditionViolated, "m must be >= 1");
  const Field& field = f.field();
  const u64 q = field->q();
  require(std::gcd(m, q) == 1, Errc::NotCoprime, "gcd(m, q) must be 1");
  require(!(f.degree() == 1 && f[0] == 0), Errc::DegenerateInput, "f = x has root 0, which has no multiplicative order");
  const auto root = detail::root_data(f);
  const u64 e = mult_order(ExtElement::generator(root.ctx));

  u64 m1 = m, m2 = 1;
  for (const auto& [r, k] : integer_factor(m)) {
    if (e % r != 0) continue;
    const u64 rk = checked_pow(r, k);
    m1 /= rk;
    m2 *= rk;
  }

  DegreeDistribution dist;
  dist.q = q;
  dist.total_degree = checked_mul(root.n, m);
  const u64 base = checked_mul(root.n, m2);
  for (u64 d : integer_divisors(m1)) {
    const u64 label = checked_mul(checked_mul(d, m2), e);
    const u64 degree = ord_mod(q % label, label);
    const u64 count = detail::exact_div(checked_mul(base, integer_phi(d)), degree, "factor count for order " + std::to_string(label));
    dist.classes.push_back({label, degree, count});
  }
  detail::sort_classes(dist.classes);

  u128 roots = 0;
  for (const auto& c : dist.classes) roots += static_cast<u128>(c.degree) * c.count;
  check_internal(roots == dist.total_degree, "class degrees do not add up to n m");
  return dist;
}

/// ceil(q^m W(g1) / p^u) with m = deg g2 and
/// u = ceil(log_p nu(g2 h)) - ceil(log_p nu(h)).
inline u64 ni_lower_bound(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  require(!g.is_zero(), Errc::ZeroPolynomial, "g must be nonzero");
  require(g.degree() >= 1, Errc::ConstantPolynomial, "g must be nonconstant");
  require(g[0] != 0, Errc::DivisibleByX, "g must satisfy gcd(g, x) = 1");
  const auto root = detail::root_data(f);
  require(root.h.degree() >= 1, Errc::DegenerateInput, "f = x has F_q-order 1, so nu(h) = 0");
  const auto [g1, g2] = split_g(g.monic(), root.h);
  const u64 p = f.field()->p();
  const unsigned u = ceil_log(p, nu(g2 * root.h)) - ceil_log(p, nu(root.h));
  const u64 num = checked_mul(checked_pow(f.field()->q(), static_cast<u64>(g2.degree())), count_divisors(g1.monic()));
  const u64 den = checked_pow(p, u);
  return (num + den - 1) / den;
}

enum class IrreducibilityReason {
  /// g is a nonzero constant: f(c x) is irreducible with f.
  TrivialG,
  /// q = p and g is a degree-one H dividing h but not (x^n - 1)/h.
  DegreeOneBranch,
  /// q = p = 2, g = x^2 + 1, h squarefree and divisible by x + 1.
  CharTwoSquareBranch,
  Reducible,
};

constexpr std::string_view reason_name(IrreducibilityReason r) noexcept {
  switch (r) {
    case IrreducibilityReason::TrivialG: return "trivial-g";
    case IrreducibilityReason::DegreeOneBranch: return "degree-one-branch";
    case IrreducibilityReason::CharTwoSquareBranch: return "char-two-square-branch";
    case IrreducibilityReason::Reducible: return "reducible";
  }
  return "unknown";
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  IrreducibilityReason reason = IrreducibilityReason::Reducible;
};

/// Decides irreducibility of f(L_g(x)) three ways (the class distribution,
/// the characterization by (p, h, g), and the trace tests for g = x - 1 and
/// g = x^2 + 1) and fails with Internal if they disagree.
inline IrreducibilityVerdict is_composition_irreducible(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  require(!g.is_zero(), Errc::ZeroPolynomial, "g must be nonzero");
  require(g[0] != 0, Errc::DivisibleByX, "g must satisfy gcd(g, x) = 1");
  const Field& field = f.field();
  const auto root = detail::root_data(f);

  const DegreeDistribution dist = additive_distribution(f, g);
  const bool by_distribution = dist.frobenius_power == 0 && dist.factor_count() == 1;
  if (g.degree() == 0) {
    check_internal(by_distribution, "constant g must give an irreducible composition");
    return {true, IrreducibilityReason::TrivialG};
  }

  const Poly gm = g.monic();
  const u64 p = field->p();
  const bool prime_field = field->is_prime_field();
  IrreducibilityVerdict verdict;
  if (prime_field && gm.degree() == 1) {
    const Poly xn1 = Poly::x_pow_minus_one(field, root.n);
    if (gm.divides(root.h) && !gm.divides(xn1 / root.h)) verdict = {true, IrreducibilityReason::DegreeOneBranch};
  } else if (prime_field && p == 2 && gm == Poly::from_ints(field, {1, 0, 1})) {
    const Poly x1 = Poly::from_ints(field, {1, 1});
    if (nu(root.h) == 1 && x1.divides(root.h)) verdict = {true, IrreducibilityReason::CharTwoSquareBranch};
  }
  check_internal(verdict.irreducible == by_distribution,
                 "characterization and distribution disagree on irreducibility of f(L_g(x))");

  const bool trace_nonzero = root.f[root.n - 1] != 0;
  if (prime_field && gm == Poly::from_ints(field, {-1, 1})) {
    check_internal(verdict.irreducible == trace_nonzero, "trace test for g = x - 1 disagrees");
  }
  if (prime_field && p == 2 && gm == Poly::from_ints(field, {1, 0, 1})) {
    check_internal(verdict.irreducible == (trace_nonzero && root.n % 2 == 1), "trace test for g = x^2 + 1 disagrees");
  }
  return verdict;
}

/// For irreducible g coprime to x and h: one factor of degree n and
/// n (q^d - 1) / lcm(n, e) factors of degree lcm(n, e), e = ord(x, g).
inline DegreeDistribution irreducible_g_distribution(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  require(g.degree() >= 1, Errc::NotIrreducible, "g must be irreducible, got a constant");
  require(is_irreducible(g), Errc::NotIrreducible, "g must be irreducible");
  const Poly gm = g.monic();
  require(gm[0] != 0, Errc::NotCoprime, "g must be coprime to x");
  const auto root = detail::root_data(f);
  require(gcd(gm, root.h).degree() == 0, Errc::NotCoprime, "g must be coprime to the F_q-order of a root of f");

  const u64 q = f.field()->q();
  const u64 n = root.n;
  const u64 e = ord_x_mod(gm);
  const u64 l = checked_lcm(n, e);
  const u64 qd1 = checked_pow(q, static_cast<u64>(gm.degree())) - 1;

  DegreeDistribution dist;
  dist.q = q;
  dist.total_degree = checked_mul(n, qd1 + 1);
  dist.classes.push_back({root.h, n, 1});
  dist.classes.push_back({gm * root.h, l, detail::exact_div(checked_mul(n, qd1), l, "count of degree-lcm(n, e) factors")});
  detail::sort_classes(dist.classes);

  const DegreeDistribution general = additive_distribution(f, gm);
  bool same = general.classes.size() == dist.classes.size();
  for (std::size_t i = 0; same && i < dist.classes.size(); ++i) {
    same = general.classes[i].degree == dist.classes[i].degree && general.classes[i].count == dist.classes[i].count &&
           std::get<Poly>(general.classes[i].order) == std::get<Poly>(dist.classes[i].order);
  }
  check_internal(same, "irreducible-g distribution disagrees with the general distribution");
  return dist;
}

}  // namespace linfactor
