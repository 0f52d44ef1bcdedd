#include <gtest/gtest.h>

#include <random>

#include "linfactor/linfactor.hpp"
#include "oracles.hpp"

using namespace linfactor;

namespace {

Field F(std::uint32_t p) { return make_prime_field(p); }

Poly P(const Field& f, const char* text) { return parse_poly(text, f); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

struct Triple {
  Poly order;
  u64 degree;
  u64 count;
};

void expect_classes(const DegreeDistribution& d, const std::vector<Triple>& want) {
  ASSERT_EQ(d.classes.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(std::get<Poly>(d.classes[i].order), want[i].order) << i;
    EXPECT_EQ(d.classes[i].degree, want[i].degree) << i;
    EXPECT_EQ(d.classes[i].count, want[i].count) << i;
  }
}

}  // namespace

TEST(SplitG, Examples) {
  auto f2 = F(2);
  auto [g1, g2] = split_g(P(f2, "(x+1)(x^3+x^2+1)"), P(f2, "x^2+1"));
  EXPECT_EQ(g1, P(f2, "x^3+x^2+1"));
  EXPECT_EQ(g2, P(f2, "x+1"));
  auto [a1, a2] = split_g(P(f2, "x^3+x^2+1"), P(f2, "x^2+1"));
  EXPECT_EQ(a1, P(f2, "x^3+x^2+1"));
  EXPECT_TRUE(a2.is_one());
  auto [b1, b2] = split_g(P(f2, "x^2+x+1"), P(f2, "x^2+x+1"));
  EXPECT_TRUE(b1.is_one());
  EXPECT_EQ(b2, P(f2, "x^2+x+1"));
  EXPECT_EQ(code_of([&] { split_g(P(f2, "x^2+x"), P(f2, "x+1")); }), Errc::DivisibleByX);
}

TEST(AdditiveDistribution, WorkedExampleOverF2) {
  auto f2 = F(2);
  const auto d = additive_distribution(P(f2, "x^2+x+1"), P(f2, "x^4+x^2+x+1"));
  expect_classes(d, {{P(f2, "(x+1)^3"), 4, 1}, {P(f2, "(x^3+x^2+1)(x+1)^3"), 28, 1}});
  EXPECT_EQ(d.total_degree, 32u);
  EXPECT_EQ(d.frobenius_power, 0u);
}

TEST(AdditiveDistribution, TrivialAndShiftCases) {
  auto f5 = F(5);
  const Poly f = P(f5, "x^4+x-1");
  const auto trivial = additive_distribution(f, Poly::one(f5));
  ASSERT_EQ(trivial.classes.size(), 1u);
  EXPECT_EQ(trivial.classes[0].degree, 4u);
  EXPECT_EQ(trivial.classes[0].count, 1u);
  // h = x^3+x^2+x+1 since f has zero trace; g = x-1 is coprime to h, so the
  // five quartics split as one with order h and four with order x^4-1
  const auto shifts = additive_distribution(f, P(f5, "x-1"));
  expect_classes(shifts, {{P(f5, "x^3+x^2+x+1"), 4, 1}, {P(f5, "x^4-1"), 4, 4}});
  EXPECT_EQ(shifts.histogram(), (Histogram{{{4, 1}, 5}}));
}

TEST(AdditiveDistribution, FrobeniusPowerRaisesMultiplicity) {
  auto f2 = F(2);
  const Poly f = P(f2, "x^2+x+1");
  const Poly g = P(f2, "x^2+x");  // x (x+1)
  const auto d = additive_distribution(f, g);
  EXPECT_EQ(d.frobenius_power, 1u);
  EXPECT_EQ(d.histogram(), histogram_of(factor(compose_f_Lg(f, g))));
}

TEST(AdditiveDistribution, Rejections) {
  auto f2 = F(2);
  EXPECT_EQ(code_of([&] { additive_distribution(P(f2, "x^2+1"), P(f2, "x+1")); }), Errc::NotIrreducible);
  EXPECT_EQ(code_of([&] { additive_distribution(P(f2, "x^2+x+1"), Poly(f2)); }), Errc::ZeroPolynomial);
  EXPECT_EQ(code_of([&] { additive_distribution(P(f2, "x^2+x+1"), P(F(3), "x+1")); }), Errc::MixedFields);
}

TEST(AdditiveDistribution, MatchesOracleOnSmallSweep) {
  for (auto field : {F(2), F(3), make_field(2, 2)}) {
    const unsigned fdeg = field->q() == 2 ? 4 : 2;
    for (const Poly& f : oracle::irreducibles_up_to(field, fdeg)) {
      for (const Poly& g : oracle::monic_up_to(field, 2)) {
        if (g[0] == 0) continue;
        const auto d = additive_distribution(f, g);
        const auto actual = factor(compose_f_Lg(f, g));
        ASSERT_EQ(d.histogram(), histogram_of(actual)) << to_string(f) << " | " << to_string(g);
        u64 roots = 0;
        for (const auto& c : d.classes) roots += c.degree * c.count;
        EXPECT_EQ(roots, d.total_degree);
      }
    }
  }
}

TEST(AdditiveDistribution, OrderLabelsMatchRootsOfActualFactors) {
  std::mt19937_64 rng(31);
  for (auto field : {F(2), F(3), make_field(2, 2), F(5)}) {
    for (int i = 0; i < 5; ++i) {
      const Poly f = oracle::random_irreducible(field, 1 + rng() % 3, rng);
      Poly g = oracle::random_poly(field, 1 + rng() % 2, rng);
      if (g[0] == 0) g = g + Poly::one(field);
      const auto d = additive_distribution(f, g);
      for (const auto& [P_, m] : factor(compose_f_Lg(f, g)).factors) {
        const Poly h = fq_order(ExtElement::generator(ExtField::from_irreducible(P_))).poly();
        bool found = false;
        for (const auto& c : d.classes) {
          if (std::get<Poly>(c.order) == h) {
            found = true;
            EXPECT_EQ(c.degree, static_cast<u64>(P_.degree()));
          }
        }
        EXPECT_TRUE(found) << to_string(f) << " | " << to_string(g) << " | " << to_string(P_);
      }
    }
  }
}

TEST(AdditiveDistribution, InvariantUnderConjugateRoots) {
  // every irreducible f has the same minimal polynomial for all its roots,
  // so recomputing from the minimal polynomial of a conjugate must agree
  auto f3 = F(3);
  const Poly f = P(f3, "x^3-x+1");
  auto ctx = ExtField::make(f);
  const auto z = ExtElement::generator(ctx);
  for (unsigned i = 0; i < 3; ++i) {
    const Poly m = minimal_polynomial(frobenius(z, i));
    EXPECT_EQ(m, f);
    const auto a = additive_distribution(m, P(f3, "x^2+1")).histogram();
    EXPECT_EQ(a, additive_distribution(f, P(f3, "x^2+1")).histogram());
  }
}

TEST(ButlerDistribution, Examples) {
  auto f2 = F(2);
  const Poly f = P(f2, "x^2+x+1");
  const auto d3 = butler_distribution(f, 3);
  ASSERT_EQ(d3.classes.size(), 1u);
  EXPECT_EQ(std::get<u64>(d3.classes[0].order), 9u);
  EXPECT_EQ(d3.classes[0].degree, 6u);
  EXPECT_EQ(d3.classes[0].count, 1u);
  const auto d5 = butler_distribution(f, 5);
  ASSERT_EQ(d5.classes.size(), 2u);
  EXPECT_EQ(std::get<u64>(d5.classes[0].order), 3u);
  EXPECT_EQ(d5.classes[0].degree, 2u);
  EXPECT_EQ(d5.classes[0].count, 1u);
  EXPECT_EQ(std::get<u64>(d5.classes[1].order), 15u);
  EXPECT_EQ(d5.classes[1].degree, 4u);
  EXPECT_EQ(d5.classes[1].count, 2u);
  const auto d1 = butler_distribution(f, 1);
  ASSERT_EQ(d1.classes.size(), 1u);
  EXPECT_EQ(std::get<u64>(d1.classes[0].order), 3u);
  EXPECT_EQ(d1.classes[0].degree, 2u);
  EXPECT_EQ(d1.classes[0].count, 1u);
  EXPECT_EQ(histogram_of(factor(P(f2, "x^10+x^5+1"))), d5.histogram());
  EXPECT_EQ(code_of([&] { butler_distribution(f, 4); }), Errc::NotCoprime);
  EXPECT_EQ(code_of([&] { butler_distribution(P(f2, "x^2+1"), 3); }), Errc::NotIrreducible);
  EXPECT_EQ(code_of([&] { butler_distribution(P(f2, "x"), 3); }), Errc::DegenerateInput);
}

TEST(NiLowerBound, Examples) {
  auto f2 = F(2);
  EXPECT_EQ(ni_lower_bound(P(f2, "x^2+x+1"), P(f2, "x^4+x^2+x+1")), 2u);
  EXPECT_EQ(ni_lower_bound(P(f2, "x^4+x+1"), P(f2, "x^2+x+1")), 2u);
  // degree-one g equal to an irreducible h that divides x^n - 1 once
  EXPECT_EQ(ni_lower_bound(P(F(3), "x^2+1"), P(F(3), "x+1")), 1u);
  EXPECT_EQ(ni_lower_bound(P(f2, "x^2+x+1"), P(f2, "x+1")), 1u);
  EXPECT_EQ(code_of([&] { ni_lower_bound(P(f2, "x^2+x+1"), Poly::one(f2)); }), Errc::ConstantPolynomial);
  EXPECT_EQ(code_of([&] { ni_lower_bound(P(f2, "x^2+x+1"), P(f2, "x^2+x")); }), Errc::DivisibleByX);
  EXPECT_EQ(code_of([&] { ni_lower_bound(P(f2, "x"), P(f2, "x+1")); }), Errc::DegenerateInput);
}

TEST(NiLowerBound, NeverExceedsActualCount) {
  for (auto field : {F(2), F(3)}) {
    for (const Poly& f : oracle::irreducibles_up_to(field, 3)) {
      if (f == Poly::x(field)) continue;
      for (const Poly& g : oracle::monic_up_to(field, 2, 1)) {
        if (g[0] == 0) continue;
        const u64 actual = additive_distribution(f, g).factor_count();
        EXPECT_LE(ni_lower_bound(f, g), actual) << to_string(f) << " | " << to_string(g);
      }
    }
  }
}

TEST(CompositionIrreducible, Examples) {
  auto f2 = F(2);
  auto v = is_composition_irreducible(P(f2, "x^2+x+1"), P(f2, "x-1"));
  EXPECT_TRUE(v.irreducible);
  EXPECT_EQ(v.reason, IrreducibilityReason::DegreeOneBranch);
  EXPECT_TRUE(is_irreducible(P(f2, "x^4+x+1")));
  v = is_composition_irreducible(P(f2, "x^3+x^2+1"), P(f2, "x^2+1"));
  EXPECT_TRUE(v.irreducible);
  EXPECT_EQ(v.reason, IrreducibilityReason::CharTwoSquareBranch);
  v = is_composition_irreducible(P(F(5), "x^4+x-1"), P(F(5), "x-1"));
  EXPECT_FALSE(v.irreducible);
  EXPECT_EQ(v.reason, IrreducibilityReason::Reducible);
  v = is_composition_irreducible(P(f2, "x^3+x+1"), Poly::one(f2));
  EXPECT_TRUE(v.irreducible);
  EXPECT_EQ(v.reason, IrreducibilityReason::TrivialG);
  // over F_4 nothing nontrivial is irreducible
  auto f4 = make_field(2, 2);
  EXPECT_FALSE(is_composition_irreducible(P(f4, "x^2+x+t"), P(f4, "x+1")).irreducible);
}

TEST(CompositionIrreducible, AgreesWithOracle) {
  for (auto field : {F(2), F(3)}) {
    for (const Poly& f : oracle::irreducibles_up_to(field, 4)) {
      for (const Poly& g : oracle::monic_up_to(field, 2)) {
        if (g[0] == 0) continue;
        const bool predicted = is_composition_irreducible(f, g).irreducible;
        EXPECT_EQ(predicted, is_irreducible(compose_f_Lg(f, g))) << to_string(f) << " | " << to_string(g);
      }
    }
  }
}

TEST(IrreducibleG, Examples) {
  auto f2 = F(2);
  const Poly f = P(f2, "x^4+x+1");
  const auto d = irreducible_g_distribution(f, P(f2, "x^2+x+1"));
  expect_classes(d, {{P(f2, "(x+1)^3"), 4, 1}, {P(f2, "(x+1)^3(x^2+x+1)"), 12, 1}});
  const auto d7 = irreducible_g_distribution(f, P(f2, "x^3+x+1"));
  expect_classes(d7, {{P(f2, "(x+1)^3"), 4, 1}, {P(f2, "(x+1)^3(x^3+x+1)"), 28, 1}});
  // g divides x^n - 1 and is coprime to h: every factor has degree n
  const Poly f3 = P(f2, "x^3+x+1");
  EXPECT_EQ(fq_order(ExtElement::generator(ExtField::make(f3))).poly(), P(f2, "x^2+x+1"));
  const auto same = irreducible_g_distribution(f3, P(f2, "x+1"));
  for (const auto& c : same.classes) EXPECT_EQ(c.degree, 3u);
  EXPECT_EQ(same.factor_count(), 2u);
  EXPECT_EQ(code_of([&] { irreducible_g_distribution(f, P(f2, "x+1")); }), Errc::NotCoprime);
  EXPECT_EQ(code_of([&] { irreducible_g_distribution(f, P(f2, "x^2+1")); }), Errc::NotIrreducible);
}
