#ifndef FITRES_SCALAR_HPP
#define FITRES_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "fitres/bigint.hpp"
#include "fitres/errors.hpp"

namespace fitres {

// Prime field F_p, p an odd prime < 2^31. Elements are reduced representatives in [0, p).
class FpField {
 public:
  using Elt = uint32_t;

  explicit FpField(uint32_t p);

  uint32_t p() const { return p_; }
  uint32_t zero() const { return 0; }
  uint32_t one() const { return 1; }
  bool is_zero(uint32_t a) const { return a == 0; }
  bool eq(uint32_t a, uint32_t b) const { return a == b; }
  std::string to_string(uint32_t a) const { return std::to_string(a); }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a ? p_ - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const;
  uint32_t reduce_i64(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<uint32_t>(m);
  }

  bool operator==(const FpField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

bool is_odd_prime(uint32_t p);

// A field element carried with its field tag: either F_p or Q.
// This is the user-facing scalar (parser, field_ops); engine internals work on
// raw uint32_t residues with an FpField context.
class Scalar {
 public:
  static Scalar fp(uint32_t value, uint32_t p) { return Scalar(FpVal{value % p, p}); }
  static Scalar rational(Rational q) { return Scalar(std::move(q)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  uint32_t field_char() const { return is_rational() ? 0 : std::get<FpVal>(v_).p; }
  uint32_t fp_value() const { return std::get<FpVal>(v_).value; }
  const Rational& rat_value() const { return std::get<Rational>(v_); }

  bool is_zero() const {
    return is_rational() ? rat_value().is_zero() : fp_value() == 0;
  }

  Scalar add(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar neg() const;
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  std::string to_string() const;

 private:
  struct FpVal {
    uint32_t value;
    uint32_t p;
  };
  explicit Scalar(FpVal v) : v_(v) {}
  explicit Scalar(Rational q) : v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<FpVal, Rational> v_;
};

} // namespace fitres

#endif
