#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperjacobi/errors.hpp"
#include "hyperjacobi/pochhammer.hpp"
#include "hyperjacobi/rational.hpp"

using namespace hyperjacobi;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Rational sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK((q(2, 3) * q(3, 4)).to_string() == "1/2");
  CHECK(q(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), PoleError);
  CHECK_THROWS_AS(q(1) / q(0), PoleError);
}

TEST_CASE("rational parse and conversions") {
  CHECK(Rational::parse("-7/21") == q(-1, 3));
  CHECK(Rational::parse("+12") == q(12));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK(Rational::from_double(0.375) == q(3, 8));
  CHECK(q(1, 4).to_double() == 0.25);
  CHECK(q(-2, 3).pow(-2) == q(9, 4));
  CHECK(q(5).is_integer());
  CHECK(q(-3).is_nonpositive_integer());
  CHECK_FALSE(q(1, 2).is_nonpositive_integer());
}

TEST_CASE("rising factorial") {
  CHECK(rising(q(7, 3), 0) == q(1));
  CHECK(rising(q(1), 4) == q(24));
  CHECK(rising(q(-3), 5) == q(0));
  CHECK(rising(q(3), 2) == q(12));
}

TEST_CASE("falling factorial and extended binomial") {
  CHECK(falling(q(2, 5), 0) == q(1));
  CHECK(falling(q(5), 2) == q(20));
  CHECK(falling(q(7, 2), 3) == q(105, 8));
  CHECK(-rising(q(-7, 2), 3) == q(105, 8));
  CHECK(binom_ext(q(3, 7), 0) == q(1));
  CHECK(binom_ext(q(5), 2) == q(10));
  CHECK(binom_ext(q(1, 2), 2) == q(-1, 8));
}

TEST_CASE("gamma ratio as a finite product") {
  CHECK(gamma_ratio(q(1), 4) == q(24));
  CHECK(gamma_ratio(q(1, 2), 1) == q(1, 2));
  CHECK(gamma_ratio(q(9, 4), 0) == q(1));
  CHECK_THROWS_AS(gamma_ratio(q(-2), 3), PoleError);
  CHECK_THROWS_AS(gamma_ratio(q(0), 1), PoleError);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == q(1));
  CHECK(factorial(10) == q(3628800));
  CHECK(binomial(6, 2) == q(15));
  CHECK(binomial(3, 5) == q(0));
}

TEST_CASE("pochhammer value record") {
  auto p = PochhammerValue::of(q(3, 2), 3);
  CHECK(p.value == q(3, 2) * q(5, 2) * q(7, 2));
  CHECK(PochhammerValue::of(q(-4), 0).value == q(1));
}

TEST_CASE("sign and shift laws over sampled rationals") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Rational x = sample(rng);
    std::uniform_int_distribution<unsigned> nd(0, 30);
    unsigned n = nd(rng);
    Rational sg = (n % 2 == 0) ? q(1) : q(-1);
    CHECK(rising(x, n) == sg * falling(-x, n));
    if (n >= 1) CHECK(rising(-x - q(static_cast<long>(n)) + q(1), n) == sg * rising(x, n));
    unsigned m = nd(rng) / 2, k = nd(rng) / 2;
    CHECK(rising(x, m + k) == rising(x, m) * rising(x + q(static_cast<long>(m)), k));
  }
}
