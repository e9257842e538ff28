#ifndef FITRES_PARSE_HPP
#define FITRES_PARSE_HPP

#include <string>
#include <vector>

#include "fitres/poly.hpp"

namespace fitres {

// Polynomial grammar: terms joined by + and -, integer or a/b coefficients,
// variables by declared name, powers with ^, products by * or juxtaposition.
//   e.g.  "x^2 - 3*x*y + 2",  "2/3x1^2x2",  "x1x2" (with vars x1, x2 declared)
// Names are matched longest-first so juxtaposition works with multi-char names.

namespace detail {

struct PolyLexer {
  const std::string& s;
  const std::vector<std::string>& names;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (start == pos) fail(Err::ParseError, "expected number in '" + s + "'");
    return s.substr(start, pos - start);
  }
  // longest declared-name match at current position, or -1
  int try_name() {
    skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < names.size(); ++i) {
      const auto& n = names[i];
      if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
        best = static_cast<int>(i);
        best_len = n.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }
};

} // namespace detail

template <class F>
BasicPoly<F> parse_poly(const F& f, const std::string& text,
                        const std::vector<std::string>& var_names,
                        std::function<typename F::Elt(const std::string&)> coeff_of) {
  detail::PolyLexer lx{text, var_names};
  std::vector<typename BasicPoly<F>::Term> terms;
  bool first = true;
  while (!lx.done()) {
    bool neg = false;
    if (lx.eat('-')) {
      neg = true;
    } else if (lx.eat('+')) {
      // explicit plus
    } else if (!first) {
      fail(Err::ParseError, "expected + or - in '" + text + "'");
    }
    first = false;
    // term: optional coefficient followed by variable factors
    typename F::Elt coeff = f.one();
    bool saw_factor = false;
    char c = lx.peek();
    if (c >= '0' && c <= '9') {
      std::string num = lx.number();
      if (lx.eat('/')) {
        std::string den = lx.number();
        coeff = coeff_of(num + "/" + den);
      } else {
        coeff = coeff_of(num);
      }
      saw_factor = true;
    }
    Monomial mono = Monomial::one();
    while (true) {
      if (lx.eat('*')) {
        // explicit product; next factor mandatory
      }
      int v = lx.try_name();
      if (v < 0) break;
      int power = 1;
      if (lx.eat('^')) power = std::stoi(lx.number());
      mono = mono * Monomial::var(v, power);
      saw_factor = true;
    }
    if (!saw_factor) fail(Err::ParseError, "empty term in '" + text + "'");
    if (neg) coeff = f.neg(coeff);
    terms.push_back({mono, coeff});
  }
  return poly_from_terms(f, std::move(terms));
}

FpPoly parse_fp_poly(const FpField& f, const std::string& text,
                     const std::vector<std::string>& var_names);
QPoly parse_q_poly(const std::string& text, const std::vector<std::string>& var_names);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names);

// Canonical print: terms degrevlex-descending, coefficients as canonical
// residues/fractions, '*' between all factors. parse(print(f)) == f.
template <class F>
std::string poly_to_string(const F& f, const BasicPoly<F>& p,
                           const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const auto& [m, c] = p.terms[i];
    std::string cs = f.to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (i == 0) {
      if (negative) {
        out += "-";
        cs = cs.substr(1);
      }
    } else {
      out += negative ? " - " : " + ";
      if (negative) cs = cs.substr(1);
    }
    std::string ms = monomial_to_string(m, var_names);
    if (ms.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += ms;
    } else {
      out += cs + "*" + ms;
    }
  }
  return out;
}

} // namespace fitres

#endif
