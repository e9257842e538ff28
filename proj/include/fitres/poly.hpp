#ifndef FITRES_POLY_HPP
#define FITRES_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "fitres/monomial.hpp"
#include "fitres/scalar.hpp"

namespace fitres {

// Field of rationals, same interface as FpField so polynomial code is shared.
class QField {
 public:
  using Elt = Rational;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  bool is_zero(const Rational& a) const { return a.is_zero(); }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const { return a.inv(); }
  std::string to_string(const Rational& a) const { return a.to_string(); }
};

// Sparse multivariate polynomial: terms sorted degrevlex-descending, lead first,
// no zero coefficients stored; the zero polynomial is the empty term list.
template <class F>
struct BasicPoly {
  using C = typename F::Elt;
  using Term = std::pair<Monomial, C>;
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lead_monomial() const { return terms.front().first; }
  const C& lead_coeff() const { return terms.front().second; }

  // Total degree of the lead term; -1 for the zero polynomial.
  int degree() const { return terms.empty() ? -1 : terms.front().first.degree(); }

  // All monomials share one total degree (vacuous for zero).
  bool is_homogeneous() const {
    for (const auto& t : terms)
      if (t.first.degree() != terms.front().first.degree()) return false;
    return true;
  }

  bool operator==(const BasicPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].first != o.terms[i].first || !(terms[i].second == o.terms[i].second))
        return false;
    return true;
  }
  bool operator!=(const BasicPoly& o) const { return !(*this == o); }
};

template <class F>
BasicPoly<F> poly_from_terms(const F& f, std::vector<typename BasicPoly<F>::Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return monomial_cmp(a.first, b.first) > 0;
  });
  BasicPoly<F> r;
  for (auto& t : ts) {
    if (f.is_zero(t.second)) continue;
    if (!r.terms.empty() && r.terms.back().first == t.first) {
      r.terms.back().second = f.add(r.terms.back().second, t.second);
      if (f.is_zero(r.terms.back().second)) r.terms.pop_back();
    } else {
      r.terms.push_back(std::move(t));
    }
  }
  return r;
}

template <class F>
BasicPoly<F> poly_constant(const F& f, typename F::Elt c) {
  BasicPoly<F> r;
  if (!f.is_zero(c)) r.terms.push_back({Monomial::one(), c});
  return r;
}

template <class F>
BasicPoly<F> poly_monomial(const F& f, Monomial m, typename F::Elt c) {
  BasicPoly<F> r;
  if (!f.is_zero(c)) r.terms.push_back({m, c});
  return r;
}

template <class F>
BasicPoly<F> poly_add(const F& f, const BasicPoly<F>& a, const BasicPoly<F>& b) {
  BasicPoly<F> r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = monomial_cmp(a.terms[i].first, b.terms[j].first);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      auto s = f.add(a.terms[i].second, b.terms[j].second);
      if (!f.is_zero(s)) r.terms.push_back({a.terms[i].first, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

template <class F>
BasicPoly<F> poly_neg(const F& f, const BasicPoly<F>& a) {
  BasicPoly<F> r = a;
  for (auto& t : r.terms) t.second = f.neg(t.second);
  return r;
}

template <class F>
BasicPoly<F> poly_sub(const F& f, const BasicPoly<F>& a, const BasicPoly<F>& b) {
  return poly_add(f, a, poly_neg(f, b));
}

// a * (c * u) for a scalar c and monomial u
template <class F>
BasicPoly<F> poly_mul_term(const F& f, const BasicPoly<F>& a, const Monomial& u,
                           const typename F::Elt& c) {
  BasicPoly<F> r;
  if (f.is_zero(c)) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.first * u, f.mul(t.second, c)});
  return r; // multiplying by a fixed monomial preserves degrevlex order
}

template <class F>
BasicPoly<F> poly_mul(const F& f, const BasicPoly<F>& a, const BasicPoly<F>& b) {
  BasicPoly<F> r;
  for (const auto& t : b.terms) r = poly_add(f, r, poly_mul_term(f, a, t.first, t.second));
  return r;
}

template <class F>
BasicPoly<F> poly_scale(const F& f, const BasicPoly<F>& a, const typename F::Elt& c) {
  BasicPoly<F> r;
  if (f.is_zero(c)) return r;
  r = a;
  for (auto& t : r.terms) t.second = f.mul(t.second, c);
  return r;
}

// Make the lead coefficient 1.
template <class F>
BasicPoly<F> poly_monic(const F& f, const BasicPoly<F>& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.lead_coeff()));
}

using FpPoly = BasicPoly<FpField>;
using QPoly = BasicPoly<QField>;

} // namespace fitres

#endif
