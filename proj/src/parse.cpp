#include "fitres/parse.hpp"

#include <functional>

namespace fitres {

FpPoly parse_fp_poly(const FpField& f, const std::string& text,
                     const std::vector<std::string>& var_names) {
  return parse_poly<FpField>(f, text, var_names, [&](const std::string& lit) -> uint32_t {
    auto slash = lit.find('/');
    if (slash == std::string::npos) return BigInt::from_string(lit).mod_u32(f.p());
    uint32_t num = BigInt::from_string(lit.substr(0, slash)).mod_u32(f.p());
    uint32_t den = BigInt::from_string(lit.substr(slash + 1)).mod_u32(f.p());
    return f.mul(num, f.inv(den));
  });
}

QPoly parse_q_poly(const std::string& text, const std::vector<std::string>& var_names) {
  QField q;
  return parse_poly<QField>(q, text, var_names,
                            [](const std::string& lit) { return Rational::from_string(lit); });
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& var_names) {
  std::string out;
  for (size_t i = 0; i < var_names.size(); ++i) {
    int e = m.exp(static_cast<int>(i));
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

} // namespace fitres
