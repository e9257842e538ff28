#ifndef FITRES_MONOMIAL_HPP
#define FITRES_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

#include "fitres/errors.hpp"

namespace fitres {

// Exponent vector packed into one u64 (8 variables max, exponents < 256).
// Comparison is degrevlex on the declared variable sequence: var 0 > var 1 > ...
struct Monomial {
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 255;

  uint64_t packed = 0;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set_exp(i, power);
    return m;
  }

  int exp(int i) const { return static_cast<int>((packed >> (8 * i)) & 0xffu); }

  void set_exp(int i, int v) {
    if (i < 0 || i >= kMaxVars || v < 0 || v > kMaxExp)
      fail(Err::ArityMismatch, "monomial exponent out of range");
    packed = (packed & ~(0xffULL << (8 * i))) | (static_cast<uint64_t>(v) << (8 * i));
  }

  int degree() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += exp(i);
    return d;
  }

  bool is_one() const { return packed == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = exp(i) + o.exp(i);
      if (e > kMaxExp) fail(Err::ArityMismatch, "monomial exponent overflow");
      r.set_exp(i, e);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) > o.exp(i)) return false;
    return true;
  }

  // this / o; requires o.divides(*this)
  Monomial quotient(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.set_exp(i, exp(i) - o.exp(i));
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.set_exp(i, std::max(exp(i), o.exp(i)));
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exp(i) > 0 && o.exp(i) > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return packed == o.packed; }
  bool operator!=(const Monomial& o) const { return packed != o.packed; }
};

// degrevlex: returns -1 if a < b, 0 if equal, +1 if a > b.
// Degree-compatible; ties broken by the LAST variable with differing exponent,
// where a smaller exponent there means the LARGER monomial.
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
  if (a.packed == b.packed) return 0;
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

struct MonomialDegrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) < 0; }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return std::hash<uint64_t>()(m.packed); }
};

// All monomials in nvars variables of total degree d, in degrevlex-descending order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == nvars - 1) {
      m.set_exp(var, rem);
      out.push_back(m);
      m.set_exp(var, 0);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      m.set_exp(var, e);
      rec(var + 1, rem - e);
    }
    m.set_exp(var, 0);
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial::one());
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    return monomial_cmp(a, b) > 0;
  });
  return out;
}

} // namespace fitres

#endif
