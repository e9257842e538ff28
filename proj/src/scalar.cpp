#include "fitres/scalar.hpp"

namespace fitres {

bool is_odd_prime(uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

FpField::FpField(uint32_t p) : p_(p) {
  if (p >= (1u << 31)) fail(Err::InvalidScalar, "field characteristic too large");
  if (p == 2) fail(Err::CharTwo, "characteristic 2 is not supported");
  if (!is_odd_prime(p)) fail(Err::InvalidScalar, "field characteristic must be an odd prime");
}

uint32_t FpField::inv(uint32_t a) const {
  if (a == 0) fail(Err::InvalidScalar, "inverse of zero in F_p");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1;
  int64_t r = p_, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (is_rational() != o.is_rational() ||
      (!is_rational() && field_char() != o.field_char()))
    fail(Err::FieldMismatch, "operands live in different fields");
}

Scalar Scalar::add(const Scalar& o) const {
  check_same_field(o);
  if (is_rational()) return Scalar(rat_value() + o.rat_value());
  FpField f(field_char());
  return Scalar(FpVal{f.add(fp_value(), o.fp_value()), field_char()});
}

Scalar Scalar::mul(const Scalar& o) const {
  check_same_field(o);
  if (is_rational()) return Scalar(rat_value() * o.rat_value());
  FpField f(field_char());
  return Scalar(FpVal{f.mul(fp_value(), o.fp_value()), field_char()});
}

Scalar Scalar::neg() const {
  if (is_rational()) return Scalar(-rat_value());
  FpField f(field_char());
  return Scalar(FpVal{f.neg(fp_value()), field_char()});
}

Scalar Scalar::inv() const {
  if (is_rational()) return Scalar(rat_value().inv());
  FpField f(field_char());
  return Scalar(FpVal{f.inv(fp_value()), field_char()});
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return false;
  if (is_rational()) return rat_value() == o.rat_value();
  return field_char() == o.field_char() && fp_value() == o.fp_value();
}

std::string Scalar::to_string() const {
  if (is_rational()) return rat_value().to_string();
  return std::to_string(fp_value());
}

} // namespace fitres
