#include <gtest/gtest.h>

#include "linfactor/linfactor.hpp"
#include "oracles.hpp"

using namespace linfactor;

namespace {

Field F(std::uint32_t p) { return make_prime_field(p); }

Poly P(const Field& f, const char* text) { return parse_poly(text, f); }

const char* kF3 =
    "x^84+x^81+x^80+x^76+x^73+x^72+x^70+x^69+x^67+x^65+x^60+x^57+x^56+x^54+x^51+x^50+x^45+x^44+x^42+x^39+x^38+"
    "x^36+x^30+x^27+x^26+x^16+x^15+x^14+x^13+x^10+x^8+x^7+x^6+x^5+1";

}  // namespace

TEST(Primitive, Examples) {
  auto f2 = F(2);
  EXPECT_TRUE(is_primitive(P(f2, "x^2+x+1")));
  EXPECT_TRUE(is_primitive(P(f2, "x^3+x+1")));
  EXPECT_FALSE(is_primitive(P(f2, "x^4+x^3+x^2+x+1")));
  EXPECT_TRUE(is_primitive(P(f2, "x^4+x+1")));
  EXPECT_THROW(is_primitive(P(f2, "x^2+1")), Error);
}

TEST(ExtendByPrimitive, Examples) {
  auto f2 = F(2);
  const auto s = extend_by_primitive(P(f2, "x^4+x+1"), P(f2, "x^2+x+1"));
  EXPECT_EQ(s.G1, P(f2, "x^4+x+1"));
  EXPECT_EQ(s.output(), P(f2, "x^12+x^9+x^8+x^6+x^3+x^2+1"));
  EXPECT_EQ(s.G1 * s.G2, compose_f_Lg(s.f_in, s.g));
  const auto s2 = extend_by_primitive(s.output(), P(f2, "x^3+x+1"));
  EXPECT_EQ(s2.output(), P(f2, kF3));
}

TEST(ExtendByPrimitive, Preconditions) {
  auto f2 = F(2);
  auto reason = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::PreconditionViolated);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(reason([&] { extend_by_primitive(P(f2, "x^3+x+1"), P(f2, "x^2+x+1")); }).find("gcd(n, q^d - 1)"), std::string::npos);
  EXPECT_NE(reason([&] { extend_by_primitive(P(f2, "x^2+1"), P(f2, "x^2+x+1")); }).find("f must be irreducible"), std::string::npos);
  EXPECT_NE(reason([&] { extend_by_primitive(P(f2, "x^4+x+1"), P(f2, "x^4+x^3+x^2+x+1")); }).find("primitive"), std::string::npos);
  EXPECT_NE(reason([&] { extend_by_primitive(P(f2, "x^4+x+1"), P(f2, "x+1")); }).find("x - 1"), std::string::npos);
}

TEST(ExtendByPrimitive, AgreesWithFactorization) {
  for (auto field : {F(2), F(3), make_field(2, 2), F(5)}) {
    const u64 q = field->q();
    const auto fs = oracle::irreducibles_up_to(field, 4);
    // every f for q <= 3, a fixed stride through the list otherwise
    const std::size_t stride = q <= 3 ? 1 : 11;
    for (std::size_t i = 0; i < fs.size(); i += stride) {
      const Poly& f = fs[i];
      for (const Poly& g : oracle::irreducibles_up_to(field, 3)) {
        if (g[0] == 0 || g == Poly::from_ints(field, {-1, 1}) || !is_primitive(g)) continue;
        const u64 qd1 = checked_pow(q, static_cast<u64>(g.degree())) - 1;
        const u64 n = static_cast<u64>(f.degree());
        if (std::gcd(n, qd1) != 1 || checked_pow(q, static_cast<u64>(g.degree())) * n > 2000) continue;
        const auto step = extend_by_primitive(f, g);
        const auto fac = factor(compose_f_Lg(f, g));
        ASSERT_EQ(fac.factors.size(), 2u) << to_string(f) << " | " << to_string(g);
        EXPECT_EQ(fac.factors[0].first, step.G1);
        EXPECT_EQ(fac.factors[1].first, step.G2);
        EXPECT_EQ(static_cast<u64>(step.G2.degree()), n * qd1);
      }
    }
  }
}

TEST(IterateF2, Chain) {
  auto f2 = F(2);
  const auto steps = iterate_f2(P(f2, "x^4+x+1"), {P(f2, "x^2+x+1"), P(f2, "x^3+x+1")});
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].output().degree(), 4);
  EXPECT_EQ(steps[1].output(), P(f2, "x^12+x^9+x^8+x^6+x^3+x^2+1"));
  EXPECT_EQ(steps[2].output(), P(f2, kF3));
  for (const auto& s : steps) EXPECT_EQ(s.G1 * s.G2, compose_f_Lg(s.f_in, s.g));

  const auto trivial = iterate_f2(P(f2, "x^4+x+1"), {});
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0].output(), P(f2, "x^4+x+1"));
}

TEST(IterateF2, Rejections) {
  auto f2 = F(2);
  auto code_and_text = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::make_pair(e.code(), std::string(e.what()));
    }
    return std::make_pair(Errc::Internal, std::string());
  };
  auto [c1, t1] = code_and_text([&] { iterate_f2(P(f2, "x^4+x+1"), {P(f2, "x^2+x+1"), P(f2, "x^2+x+1")}); });
  EXPECT_EQ(c1, Errc::PreconditionViolated);
  EXPECT_NE(t1.find("g_1 and g_2"), std::string::npos);
  auto [c2, t2] = code_and_text([&] { iterate_f2(P(F(3), "x^2+1"), {}); });
  EXPECT_EQ(c2, Errc::PreconditionViolated);
  auto [c3, t3] = code_and_text([&] { iterate_f2(P(f2, "x^3+x+1"), {P(f2, "x^2+x+1")}); });
  EXPECT_EQ(c3, Errc::PreconditionViolated);
}
