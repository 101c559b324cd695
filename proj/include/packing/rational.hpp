// rational.hpp
//
// Arbitrary-precision unsigned integers and nonnegative exact rationals.
// Density verdicts are strict inequalities against 1, so they must not
// depend on floating-point rounding; decimals are display-only.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace packing {

class BigUint {
 public:
  BigUint() = default;
  BigUint(uint64_t v);  // NOLINT(google-explicit-constructor): numeric literal convenience

  static BigUint from_decimal(const std::string& digits);

  bool is_zero() const { return limbs_.empty(); }
  int compare(const BigUint& o) const;

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  BigUint& operator*=(const BigUint& o);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

  // quotient and remainder; divisor must be nonzero
  static void divmod(const BigUint& num, const BigUint& den, BigUint& quot, BigUint& rem);
  static BigUint gcd(BigUint a, BigUint b);

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
  friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }

  std::string to_decimal() const;
  uint64_t to_u64() const;  // throws if it does not fit

 private:
  void trim();
  // little-endian 32-bit limbs held in 64-bit slots for easy carries
  std::vector<uint32_t> limbs_;
};

// Nonnegative rational kept in lowest terms.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(uint64_t num, uint64_t den);
  Rational(BigUint num, BigUint den);

  const BigUint& num() const { return num_; }
  const BigUint& den() const { return den_; }

  Rational& operator+=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }

  int compare(const Rational& o) const;
  bool less_than_one() const { return num_ < den_; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }

  std::string to_fraction_string() const;  // "num/den"
  // Decimal rendering with `digits` places, rounded half-up on the last
  // place (e.g. 0.9997707... -> "0.999771" at 6 digits).
  std::string to_decimal_string(int digits) const;

 private:
  void reduce();
  BigUint num_;
  BigUint den_;
};

}  // namespace packing
