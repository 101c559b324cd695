#include "packing/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace packing {

BigUint::BigUint(uint64_t v) {
  while (v) {
    limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (compare(o) < 0) throw std::underflow_error("BigUint: subtraction would go negative");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
    if (d < 0) {
      d += int64_t{1} << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(d);
  }
  trim();
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& o) {
  if (is_zero() || o.is_zero()) {
    limbs_.clear();
    return *this;
  }
  std::vector<uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      uint64_t cur = out[k] + carry;
      out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

// schoolbook binary long division; sizes here stay small
void BigUint::divmod(const BigUint& num, const BigUint& den, BigUint& quot, BigUint& rem) {
  if (den.is_zero()) throw std::domain_error("BigUint: division by zero");
  quot = BigUint();
  rem = BigUint();
  if (num.is_zero()) return;
  size_t bits = num.limbs_.size() * 32;
  quot.limbs_.assign(num.limbs_.size(), 0);
  for (size_t b = bits; b-- > 0;) {
    // rem = rem*2 + bit b of num
    uint32_t carry = 0;
    for (size_t i = 0; i < rem.limbs_.size(); ++i) {
      uint32_t nxt = rem.limbs_[i] >> 31;
      rem.limbs_[i] = (rem.limbs_[i] << 1) | carry;
      carry = nxt;
    }
    if (carry) rem.limbs_.push_back(carry);
    if ((num.limbs_[b / 32] >> (b % 32)) & 1) {
      if (rem.limbs_.empty()) rem.limbs_.push_back(0);
      rem.limbs_[0] |= 1;
    }
    if (!(rem.compare(den) < 0)) {
      rem -= den;
      quot.limbs_[b / 32] |= uint32_t{1} << (b % 32);
    }
  }
  quot.trim();
  rem.trim();
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  while (!b.is_zero()) {
    BigUint q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigUint BigUint::from_decimal(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("BigUint: empty decimal string");
  BigUint v;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("BigUint: bad decimal digit");
    v *= BigUint(10);
    v += BigUint(static_cast<uint64_t>(ch - '0'));
  }
  return v;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  BigUint cur = *this;
  BigUint ten(10);
  while (!cur.is_zero()) {
    BigUint q, r;
    divmod(cur, ten, q, r);
    out.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    cur = std::move(q);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigUint: does not fit in 64 bits");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
  return v;
}

Rational::Rational(uint64_t num, uint64_t den) : num_(num), den_(den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

Rational::Rational(BigUint num, BigUint den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (num_.is_zero()) {
    den_ = BigUint(1);
    return;
  }
  BigUint g = BigUint::gcd(num_, den_);
  BigUint q, r;
  BigUint::divmod(num_, g, q, r);
  num_ = q;
  BigUint::divmod(den_, g, q, r);
  den_ = q;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

int Rational::compare(const Rational& o) const {
  return (num_ * o.den_).compare(o.num_ * den_);
}

std::string Rational::to_fraction_string() const {
  return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string Rational::to_decimal_string(int digits) const {
  if (digits < 1) throw std::invalid_argument("Rational: digits must be >= 1");
  // round half-up at the last place: floor(num * 10^digits / den + 1/2)
  BigUint scale(1);
  for (int i = 0; i < digits; ++i) scale *= BigUint(10);
  BigUint scaled = num_ * scale * BigUint(2) + den_;
  BigUint q, r;
  BigUint::divmod(scaled, den_ * BigUint(2), q, r);
  std::string all = q.to_decimal();
  if (static_cast<int>(all.size()) <= digits)
    all.insert(all.begin(), static_cast<size_t>(digits) + 1 - all.size(), '0');
  all.insert(all.size() - static_cast<size_t>(digits), ".");
  return all;
}

}  // namespace packing
