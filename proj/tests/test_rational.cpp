#include <doctest.h>

#include <stdexcept>

#include "packing/rational.hpp"

using namespace packing;

TEST_CASE("BigUint: arithmetic basics") {
  BigUint a(123456789012345678ULL);
  BigUint b(987654321098765432ULL);
  CHECK((a + b).to_decimal() == "1111111110111111110");
  CHECK((b - a).to_decimal() == "864197532086419754");
  CHECK((BigUint(1000000007) * BigUint(998244353)).to_decimal() == "998244359987710471");
  CHECK(BigUint(0).to_decimal() == "0");
  CHECK_THROWS_AS(BigUint(1) - BigUint(2), std::underflow_error);
}

TEST_CASE("BigUint: multi-limb multiplication and decimal round trip") {
  // 2^128 = 340282366920938463463374607431768211456
  BigUint two(2);
  BigUint p(1);
  for (int i = 0; i < 128; ++i) p *= two;
  CHECK(p.to_decimal() == "340282366920938463463374607431768211456");
  CHECK(BigUint::from_decimal(p.to_decimal()).compare(p) == 0);
}

TEST_CASE("BigUint: divmod and gcd") {
  BigUint n = BigUint::from_decimal("123456789123456789123456789");
  BigUint d = BigUint::from_decimal("987654321987");
  BigUint q, r;
  BigUint::divmod(n, d, q, r);
  CHECK((q * d + r).compare(n) == 0);
  CHECK(r < d);
  CHECK(BigUint::gcd(BigUint(48), BigUint(36)).to_decimal() == "12");
  CHECK(BigUint::gcd(BigUint(17), BigUint(5)).to_decimal() == "1");
  CHECK_THROWS_AS(BigUint::divmod(n, BigUint(0), q, r), std::domain_error);
}

TEST_CASE("Rational: reduction and comparison") {
  Rational half(2, 4);
  CHECK(half.to_fraction_string() == "1/2");
  CHECK(Rational(31, 41).to_fraction_string() == "31/41");
  CHECK(Rational(0, 7).to_fraction_string() == "0/1");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational: sums stay exact") {
  // 1/3 + 1/6 + 1/2 = 1, exactly
  Rational s = Rational(1, 3) + Rational(1, 6) + Rational(1, 2);
  CHECK(s == Rational(1, 1));
  CHECK(!s.less_than_one());
  Rational t = Rational(1, 3) + Rational(1, 6) + Rational(499, 1000);
  CHECK(t.less_than_one());
}

TEST_CASE("Rational: decimal rendering rounds half-up at the last place") {
  CHECK(Rational(1, 2).to_decimal_string(6) == "0.500000");
  CHECK(Rational(1, 3).to_decimal_string(6) == "0.333333");
  CHECK(Rational(2, 3).to_decimal_string(6) == "0.666667");
  CHECK(Rational(1, 1).to_decimal_string(3) == "1.000");
  CHECK(Rational(1999999, 1000000).to_decimal_string(2) == "2.00");
  CHECK(Rational(124999, 1000000).to_decimal_string(1) == "0.1");
  CHECK(Rational(15, 100).to_decimal_string(1) == "0.2");  // exact tie, half-up
}

TEST_CASE("Rational: rendering a strictly-below-one sum never shows 1.000000 unless equal") {
  Rational near_one(999999999, 1000000000);
  CHECK(near_one.less_than_one());
  CHECK(near_one.to_decimal_string(6) == "1.000000");  // display only; verdict is exact
}
