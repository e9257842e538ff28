#ifndef FITRES_BIGINT_HPP
#define FITRES_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fitres {

// Sign-magnitude arbitrary-precision integer, base 2^32.
// Scope: exact rational arithmetic at desk scale; no asymptotically fast algorithms.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return neg_; }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  // Truncated division (quotient rounded toward zero).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

  static int cmp(const BigInt& a, const BigInt& b);
  static BigInt gcd(BigInt a, BigInt b); // non-negative

  BigInt abs() const;
  bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool fits_int64() const;
  int64_t to_int64() const; // requires fits_int64()
  std::string to_string() const;

  // value mod m for small positive m (result in [0, m)), used to map Q results into F_p
  uint32_t mod_u32(uint32_t m) const;

 private:
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  void trim();
  void shl_bit();
  void shr_bit();
  bool odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

  bool neg_ = false;
  std::vector<uint32_t> limbs_; // little-endian, no trailing zeros; empty == 0
};

// Rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d);
  static Rational from_string(const std::string& s); // "a" or "a/b"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const; // throws InvalidScalar on /0
  Rational inv() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();
  BigInt num_, den_;
};

} // namespace fitres

#endif
