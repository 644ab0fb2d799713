#include <random>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "achset/numeric.hpp"

namespace achset {
namespace {

using boost::multiprecision::cpp_rational;

cpp_rational to_boost(const Rational& r) { return cpp_rational(r.str()); }

TEST(Rational, CanonicalOnConstruction) {
  const Rational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rational(BigInt(10), BigInt(5)).str(), "2");
  EXPECT_TRUE(Rational(BigInt(10), BigInt(5)).is_integer());
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("5/3"), Rational(BigInt(5), BigInt(3)));
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(Rational(BigInt(5), BigInt(3)).to_decimal(4), "1.6666");
  EXPECT_EQ(Rational(BigInt(-1), BigInt(8)).to_decimal(3), "-0.125");
  EXPECT_EQ(Rational(BigInt(1), BigInt(3)).to_decimal(0), "0");
  EXPECT_EQ(Rational(7).to_decimal(2), "7.00");
}

TEST(Rational, Powers) {
  EXPECT_EQ(pow2q(-3), Rational(BigInt(1), BigInt(8)));
  EXPECT_EQ(pow(Rational(BigInt(2), BigInt(3)), 3), Rational(BigInt(8), BigInt(27)));
  EXPECT_EQ(pow2(70), BigInt("1180591620717411303424"));
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), std::domain_error); }

// Exact arithmetic cross-checked against boost's cpp_rational.
TEST(RationalProperty, MatchesIndependentBignum) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> any;
  for (int i = 0; i < 1000; ++i) {
    auto pick = [&] {
      std::int64_t d = any(rng);
      if (d == 0) d = 1;
      return std::pair{any(rng), d};
    };
    const auto [an, ad] = pick();
    const auto [bn, bd] = pick();
    const Rational a(BigInt(static_cast<long>(an)), BigInt(static_cast<long>(ad)));
    const Rational b(BigInt(static_cast<long>(bn)), BigInt(static_cast<long>(bd)));
    const cpp_rational ba(cpp_rational(an) / ad);
    const cpp_rational bb(cpp_rational(bn) / bd);

    ASSERT_EQ(to_boost(a + b), ba + bb);
    ASSERT_EQ(to_boost(a - b), ba - bb);
    ASSERT_EQ(to_boost(a * b), ba * bb);
    if (b.sign() != 0) ASSERT_EQ(to_boost(a / b), ba / bb);
    ASSERT_EQ(a < b, ba < bb);
    // round trip through text keeps the canonical form
    ASSERT_EQ(Rational::parse((a + b).str()), a + b);
  }
}

TEST(Enclosure, Compare) {
  EXPECT_EQ(compare(Enclosure(Rational(1)), Enclosure(Rational(2))), Comparison::Less);
  EXPECT_EQ(compare(Enclosure(Rational(0), Rational(3)), Enclosure(Rational(2), Rational(5))), Comparison::Undecided);
  const Rational f(BigInt(5), BigInt(3));
  EXPECT_EQ(compare(Enclosure(f, f), Enclosure(f, f)), Comparison::Equal);
  EXPECT_EQ(compare(Enclosure(Rational(3)), Enclosure(Rational(1), Rational(2))), Comparison::Greater);
  // touching but not exact stays undecided
  EXPECT_EQ(compare(Enclosure(Rational(1)), Enclosure(Rational(1), Rational(2))), Comparison::Undecided);
}

TEST(Enclosure, Arithmetic) {
  const Enclosure a(Rational(1), Rational(2));
  const Enclosure b(Rational(3), Rational(4));
  EXPECT_EQ(a + b, Enclosure(Rational(4), Rational(6)));
  EXPECT_EQ(a.scale(Rational(BigInt(1), BigInt(2))), Enclosure(Rational(BigInt(1), BigInt(2)), Rational(1)));
  const Enclosure u(Rational(0), Rational(1));
  EXPECT_EQ(u - u, Enclosure(Rational(-1), Rational(1)));
  EXPECT_EQ(a.scale(Rational(-2)), Enclosure(Rational(-4), Rational(-2)));
  EXPECT_THROW(Enclosure(Rational(2), Rational(1)), std::invalid_argument);
}

TEST(EnclosureProperty, RefinementNeverWidens) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> v(-50, 50);
  for (int i = 0; i < 500; ++i) {
    long a = v(rng), b = v(rng), c = v(rng), d = v(rng);
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const Enclosure x{Rational(a), Rational(b)};
    const Enclosure y{Rational(c), Rational(d)};
    // a refinement of x: any sub-enclosure
    const Enclosure xr(Rational(a) + (Rational(b) - Rational(a)) / 3, Rational(b) - (Rational(b) - Rational(a)) / 3);
    ASSERT_TRUE((x + y).contains(xr + y));
    ASSERT_TRUE((x - y).contains(xr - y));
    ASSERT_TRUE(x.scale(Rational(-3)).contains(xr.scale(Rational(-3))));
    ASSERT_LE((x + y).width(), x.width() + y.width());
  }
}

}  // namespace
}  // namespace achset
