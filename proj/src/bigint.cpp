#include "fitres/bigint.hpp"

#include "fitres/errors.hpp"

namespace fitres {

BigInt::BigInt(int64_t v) {
  neg_ = v < 0;
  uint64_t m = neg_ ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
  while (m) {
    limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) fail(Err::ParseError, "empty integer literal");
  BigInt r(0);
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') fail(Err::ParseError, "bad digit in integer literal");
    r = r * ten + BigInt(s[i] - '0');
  }
  r.neg_ = neg && !r.is_zero();
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
  int c = cmp_mag(a.limbs_, b.limbs_);
  return a.neg_ ? -c : c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t s = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t s = static_cast<uint64_t>(r[k]) + carry;
      r[k] = static_cast<uint32_t>(s);
      carry = s >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (neg_ == o.neg_) {
    r.limbs_ = add_mag(limbs_, o.limbs_);
    r.neg_ = neg_;
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt(0);
    if (c > 0) {
      r.limbs_ = sub_mag(limbs_, o.limbs_);
      r.neg_ = neg_;
    } else {
      r.limbs_ = sub_mag(o.limbs_, limbs_);
      r.neg_ = o.neg_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  r.limbs_ = mul_mag(limbs_, o.limbs_);
  r.neg_ = !r.limbs_.empty() && (neg_ != o.neg_);
  return r;
}

void BigInt::shl_bit() {
  uint32_t carry = 0;
  for (auto& l : limbs_) {
    uint32_t nc = l >> 31;
    l = (l << 1) | carry;
    carry = nc;
  }
  if (carry) limbs_.push_back(carry);
}

void BigInt::shr_bit() {
  uint32_t carry = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    uint32_t nc = limbs_[i] & 1u;
    limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
    carry = nc;
  }
  trim();
}

// Shift-and-subtract long division on magnitudes; adequate at our operand sizes.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) fail(Err::InvalidScalar, "division by zero");
  q = BigInt(0);
  r = BigInt(0);
  if (a.is_zero()) return;
  BigInt num = a.abs();
  BigInt den = b.abs();
  if (cmp_mag(num.limbs_, den.limbs_) < 0) {
    r = a;
    return;
  }
  // align: den << k so it has the same bit length as num
  size_t nbits_num = num.limbs_.size() * 32;
  size_t nbits_den = den.limbs_.size() * 32;
  size_t shift = nbits_num - nbits_den + 32;
  BigInt d = den;
  for (size_t i = 0; i < shift; ++i) d.shl_bit();
  BigInt rem = num;
  std::vector<bool> qbits;
  qbits.reserve(shift + 1);
  for (size_t i = 0; i <= shift; ++i) {
    if (cmp_mag(rem.limbs_, d.limbs_) >= 0) {
      rem.limbs_ = sub_mag(rem.limbs_, d.limbs_);
      rem.trim();
      qbits.push_back(true);
    } else {
      qbits.push_back(false);
    }
    d.shr_bit();
  }
  BigInt quot(0);
  for (bool bit : qbits) {
    quot.shl_bit();
    if (bit) {
      if (quot.limbs_.empty()) quot.limbs_.push_back(1);
      else quot.limbs_[0] |= 1u;
    }
  }
  quot.trim();
  quot.neg_ = !quot.limbs_.empty() && (a.neg_ != b.neg_);
  rem.neg_ = !rem.limbs_.empty() && a.neg_;
  q = quot;
  r = rem;
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int shift = 0;
  while (!a.odd() && !b.odd()) {
    a.shr_bit();
    b.shr_bit();
    ++shift;
  }
  while (!a.odd()) a.shr_bit();
  while (!b.is_zero()) {
    while (!b.odd()) b.shr_bit();
    if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a.limbs_, b.limbs_);
    b.limbs_ = sub_mag(b.limbs_, a.limbs_);
    b.trim();
  }
  for (int i = 0; i < shift; ++i) a.shl_bit();
  return a;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() > 2) return false;
  if (limbs_.size() < 2) return true;
  uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return neg_ ? m <= (1ULL << 63) : m < (1ULL << 63);
}

int64_t BigInt::to_int64() const {
  uint64_t m = 0;
  if (limbs_.size() >= 1) m |= limbs_[0];
  if (limbs_.size() >= 2) m |= static_cast<uint64_t>(limbs_[1]) << 32;
  return neg_ ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  BigInt t = abs();
  BigInt ten(10);
  std::string digits;
  while (!t.is_zero()) {
    BigInt q, r;
    divmod(t, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.is_zero() ? 0 : r.limbs_[0])));
    t = q;
  }
  if (neg_) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

uint32_t BigInt::mod_u32(uint32_t m) const {
  uint64_t acc = 0;
  for (size_t i = limbs_.size(); i-- > 0;) acc = ((acc << 32) | limbs_[i]) % m;
  if (neg_ && acc) acc = m - acc;
  return static_cast<uint32_t>(acc);
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(Err::InvalidScalar, "zero denominator");
  normalize();
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const { return *this * o.inv(); }

Rational Rational::inv() const {
  if (is_zero()) fail(Err::InvalidScalar, "inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

} // namespace fitres
