#ifndef FITRES_GROEBNER_HPP
#define FITRES_GROEBNER_HPP

#include <map>
#include <vector>

#include "fitres/poly.hpp"

namespace fitres {

// Full reduction of f modulo basis: no term of the result is divisible by any
// basis lead monomial. Deterministic; unique when the basis is a Groebner basis.
template <class F>
BasicPoly<F> poly_reduce(const F& f, BasicPoly<F> p, const std::vector<BasicPoly<F>>& basis) {
  BasicPoly<F> out;
  while (!p.is_zero()) {
    bool reduced = false;
    const auto& [m, c] = p.terms.front();
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lead_monomial().divides(m)) {
        auto factor = f.mul(c, f.inv(g.lead_coeff()));
        p = poly_sub(f, p, poly_mul_term(f, g, m.quotient(g.lead_monomial()), factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return out;
}

// Buchberger with a degree-ordered homogeneous S-pair queue and the coprime-lead
// criterion, followed by autoreduction and monic normalization. Input generators
// must be homogeneous; the reduced GB of a homogeneous ideal is homogeneous.
template <class F>
std::vector<BasicPoly<F>> reduced_groebner(const F& f, std::vector<BasicPoly<F>> gens) {
  std::vector<BasicPoly<F>> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) fail(Err::NonHomogeneous, "ideal generator is not homogeneous");
    basis.push_back(poly_monic(f, g));
  }

  // S-pair queue keyed by lcm degree
  using Pair = std::pair<size_t, size_t>;
  std::multimap<int, Pair> queue;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      const auto& a = basis[i].lead_monomial();
      const auto& b = basis[j].lead_monomial();
      if (a.coprime(b)) continue;
      queue.insert({a.lcm(b).degree(), {i, j}});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    auto it = queue.begin();
    auto [i, j] = it->second;
    queue.erase(it);
    const auto& gi = basis[i];
    const auto& gj = basis[j];
    Monomial l = gi.lead_monomial().lcm(gj.lead_monomial());
    auto spoly = poly_sub(
        f, poly_mul_term(f, gi, l.quotient(gi.lead_monomial()), f.one()),
        poly_mul_term(f, gj, l.quotient(gj.lead_monomial()), f.one()));
    auto rem = poly_reduce(f, std::move(spoly), basis);
    if (!rem.is_zero()) {
      basis.push_back(poly_monic(f, rem));
      push_pairs(basis.size() - 1);
    }
  }

  // autoreduce: minimal lead terms, then full tail reduction
  std::vector<BasicPoly<F>> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (!basis[j].lead_monomial().divides(basis[i].lead_monomial())) continue;
      if (basis[j].lead_monomial() == basis[i].lead_monomial() && j > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<BasicPoly<F>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasicPoly<F>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    auto r = poly_reduce(f, minimal[i], others);
    if (!r.is_zero()) reduced.push_back(poly_monic(f, r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return monomial_cmp(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return reduced;
}

} // namespace fitres

#endif
