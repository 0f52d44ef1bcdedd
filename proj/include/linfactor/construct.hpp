#pragma once

// Irreducible polynomials of degree n (q^d - 1) from an irreducible f of
// degree n and a primitive g of degree d, and the iterated chain over F_2.

#include <numeric>
#include <string>
#include <vector>

#include "linfactor/error.hpp"
#include "linfactor/factor.hpp"
#include "linfactor/linearized.hpp"
#include "linfactor/numtheory.hpp"
#include "linfactor/poly.hpp"
#include "linfactor/poly_text.hpp"
#include "linfactor/polyarith.hpp"

namespace linfactor {

/// f_in(L_g(x)) = G1 * G2 with deg G1 = deg f_in and G2 the new irreducible.
struct ConstructionStep {
  Poly f_in;
  Poly g;
  Poly G1;
  Poly G2;

  const Poly& output() const noexcept { return G2; }
};

/// True when a root of g generates F_{q^d}^*, i.e. ord(x, g) = q^d - 1.
inline bool is_primitive(const Poly& g) {
  require(g.degree() >= 1, Errc::NotIrreducible, "a constant is not irreducible");
  require(is_irreducible(g), Errc::NotIrreducible, to_string(g) + " is not irreducible");
  const Poly gm = g.monic();
  if (gm[0] == 0) return false;
  const u64 full = checked_pow(g.field()->q(), static_cast<u64>(gm.degree())) - 1;
  return ord_x_mod(gm) == full;
}

inline ConstructionStep extend_by_primitive(const Poly& f, const Poly& g) {
  require_same_field(f.field(), g.field());
  const Field& field = f.field();
  auto precondition = [](bool ok, const std::string& what) { require(ok, Errc::PreconditionViolated, what); };
  precondition(f.degree() >= 1 && is_irreducible(f), "f must be irreducible");
  precondition(g.degree() >= 1 && is_irreducible(g), "g must be irreducible");
  const Poly fm = f.monic();
  const Poly gm = g.monic();
  precondition(!(gm == Poly::x(field)), "g must differ from x");
  precondition(!(gm == Poly::from_ints(field, {-1, 1})), "g must differ from x - 1");
  precondition(is_primitive(gm), "g = " + to_string(gm) + " must be primitive");
  const u64 n = static_cast<u64>(fm.degree());
  const u64 qd1 = checked_pow(field->q(), static_cast<u64>(gm.degree())) - 1;
  precondition(std::gcd(n, qd1) == 1,
               "gcd(n, q^d - 1) = gcd(" + std::to_string(n) + ", " + std::to_string(qd1) + ") must be 1");

  const Poly F = compose_f_Lg(fm, gm);
  // x^{q^n} mod F by n k powerings with exponent p
  const u64 p = field->p();
  Poly xq = Poly::x(field) % F;
  for (u64 i = 0; i < n * field->k(); ++i) xq = powmod(xq, p, F);
  Poly G1 = gcd(F, xq - Poly::x(field));
  auto [G2, rem] = divrem(F, G1);
  check_internal(rem.is_zero(), "G1 does not divide f(L_g(x))");
  G2 = G2.monic();
  check_internal(static_cast<u64>(G1.degree()) == n, "G1 has degree " + std::to_string(G1.degree()) + ", expected " + std::to_string(n));
  check_internal(static_cast<u64>(G2.degree()) == n * qd1, "G2 has the wrong degree");
  check_internal(is_irreducible(G1), "G1 is reducible");
  check_internal(is_irreducible(G2), "G2 is reducible");
  return {fm, gm, std::move(G1), std::move(G2)};
}

/// Chain over F_2: f_1 = f and f_{j+1} the large factor of f_j(L_{g_j}(x)).
/// The first step is the identity step (g = 1, G1 = 1, G2 = f).
inline std::vector<ConstructionStep> iterate_f2(const Poly& f, const std::vector<Poly>& gs) {
  const Field& field = f.field();
  auto precondition = [](bool ok, const std::string& what) { require(ok, Errc::PreconditionViolated, what); };
  precondition(field->q() == 2, "iterate_f2 works over F_2 only");
  precondition(f.degree() >= 1 && is_irreducible(f), "f must be irreducible");
  const u64 n = static_cast<u64>(f.degree());

  std::vector<u64> moduli;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    require_same_field(field, gs[i].field());
    const u64 d = gs[i].degree() < 0 ? 0 : static_cast<u64>(gs[i].degree());
    const std::string name = "g_" + std::to_string(i + 1);
    precondition(d >= 2, name + " must have degree >= 2");
    precondition(is_irreducible(gs[i]) && is_primitive(gs[i]), name + " must be primitive");
    const u64 mod = checked_pow(2, d) - 1;
    precondition(std::gcd(n, mod) == 1, "gcd(n, 2^d - 1) must be 1 for " + name);
    for (std::size_t j = 0; j < i; ++j) {
      const u64 dj = static_cast<u64>(gs[j].degree());
      precondition(std::gcd(d, dj) == 1, "degrees of g_" + std::to_string(j + 1) + " and " + name + " must be coprime");
    }
    moduli.push_back(mod);
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      check_internal(std::gcd(moduli[i], moduli[j]) == 1, "2^d_i - 1 are not pairwise coprime");
    }
  }

  std::vector<ConstructionStep> steps;
  const Poly fm = f.monic();
  steps.push_back({fm, Poly::one(field), Poly::one(field), fm});
  for (const Poly& g : gs) steps.push_back(extend_by_primitive(steps.back().output(), g));
  return steps;
}

}  // namespace linfactor
