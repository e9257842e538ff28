#include "fitres/deformation.hpp"

namespace fitres {

namespace {

void check_regular_and_linear(const DeformationPair& pair, int cap) {
  const auto& R = *pair.total;
  const auto& f = R.field();
  // x not in m^2: a variable of degree 1, nonzero in R_1
  if (R.nf_monomial(Monomial::var(pair.x_var)).is_zero())
    fail(Err::HypothesisViolated, "x vanishes in the total ring");
  // degree-wise injectivity of multiplication by x through the cap
  for (int d = 0; d <= cap; ++d) {
    int hd = R.hilbert(d);
    if (hd == 0) break;
    const auto& basis = R.std_monomials(d);
    std::vector<SparseVec> cols(hd);
    for (int i = 0; i < hd; ++i)
      cols[i] = R.nf_monomial(basis[i] * Monomial::var(pair.x_var));
    if (rank_of(f, R.hilbert(d + 1), cols) != hd)
      fail(Err::HypothesisViolated,
           "x is a zerodivisor in degree " + std::to_string(d));
  }
}

} // namespace

DeformationPair adjoin_variable(RingPtr base, const std::string& name) {
  for (const auto& v : base->var_names())
    if (v == name) fail(Err::NameClash, "variable " + name + " already declared");
  std::vector<std::string> vars = base->var_names();
  vars.push_back(name);
  // same relation polynomials over the extended variable list
  std::vector<FpPoly> rels = base->relations();
  DeformationPair pair;
  pair.base = base;
  pair.total = std::make_shared<const RingPresentation>(base->field(), std::move(vars),
                                                        std::move(rels));
  pair.x_var = base->nvars();
  for (int i = 0; i < base->nvars(); ++i) pair.base_to_total.push_back(i);
  check_regular_and_linear(pair, 8);
  // H_total(d) = sum_{i <= d} H_base(i)
  for (int d = 0; d <= 6; ++d) {
    int want = 0;
    for (int i = 0; i <= d; ++i) want += base->hilbert(i);
    if (pair.total->hilbert(d) != want)
      fail(Err::Internal, "adjoined ring has wrong Hilbert function");
  }
  return pair;
}

DeformationPair declare_deformation(RingPtr total, const std::string& x_name,
                                    int regularity_cap) {
  int xv = -1;
  for (int i = 0; i < total->nvars(); ++i)
    if (total->var_names()[i] == x_name) xv = i;
  if (xv < 0) fail(Err::ParseError, "unknown variable " + x_name);
  // base = total/(x): substitute x = 0 into the relations
  std::vector<std::string> vars;
  std::vector<int> base_to_total;
  for (int i = 0; i < total->nvars(); ++i)
    if (i != xv) {
      base_to_total.push_back(i);
      vars.push_back(total->var_names()[i]);
    }
  const auto& f = total->field();
  std::vector<FpPoly> rels;
  for (const auto& g : total->relations()) {
    std::vector<FpPoly::Term> ts;
    for (const auto& [m, c] : g.terms) {
      if (m.exp(xv) != 0) continue; // killed by x = 0
      Monomial mm;
      for (size_t i = 0; i < base_to_total.size(); ++i)
        if (m.exp(base_to_total[i])) mm.set_exp(static_cast<int>(i), m.exp(base_to_total[i]));
      ts.push_back({mm, c});
    }
    FpPoly p = poly_from_terms(f, std::move(ts));
    if (!p.is_zero()) rels.push_back(std::move(p));
  }
  DeformationPair pair;
  pair.base = std::make_shared<const RingPresentation>(f, std::move(vars), std::move(rels));
  pair.total = total;
  pair.x_var = xv;
  pair.base_to_total = std::move(base_to_total);
  check_regular_and_linear(pair, regularity_cap);
  return pair;
}

FpPoly lift_base_poly(const FpPoly& p, const DeformationPair& pair) {
  FpPoly q;
  for (const auto& [m, c] : p.terms) {
    Monomial mm;
    for (size_t i = 0; i < pair.base_to_total.size(); ++i)
      if (m.exp(static_cast<int>(i))) mm.set_exp(pair.base_to_total[i], m.exp(static_cast<int>(i)));
    q.terms.push_back({mm, c});
  }
  std::sort(q.terms.begin(), q.terms.end(),
            [](const auto& a, const auto& b) { return monomial_cmp(a.first, b.first) > 0; });
  return pair.total->nf(q);
}

GradedMatrix lift_base_matrix(const GradedMatrix& A, const DeformationPair& pair) {
  GradedFreeModule src{pair.total, A.src().gen_degrees};
  GradedFreeModule tgt{pair.total, A.tgt().gen_degrees};
  GradedMatrix out(src, tgt);
  for (int j = 0; j < A.cols(); ++j)
    for (const auto& [i, p] : A.column(j)) out.set_entry(i, j, lift_base_poly(p, pair));
  return out;
}

ModulePresentation view_base_module_over_total(const ModulePresentation& M,
                                               const DeformationPair& pair) {
  GradedMatrix A = minimalize(M.presentation);
  GradedMatrix lifted = lift_base_matrix(A, pair);
  const auto& F0 = lifted.tgt();
  GradedFreeModule src{pair.total, lifted.src().gen_degrees};
  for (int i = 0; i < F0.rank(); ++i) src.gen_degrees.push_back(F0.gen_degrees[i] + 1);
  GradedMatrix out(src, F0);
  for (int j = 0; j < lifted.cols(); ++j)
    for (const auto& [i, p] : lifted.column(j)) out.set_entry(i, j, p);
  int col = lifted.cols();
  for (int i = 0; i < F0.rank(); ++i) out.set_entry(i, col++, pair.x_poly());
  return ModulePresentation{pair.total, std::move(out)};
}

LiftDivideResult lift_and_divide(const Resolution& Fprime, const DeformationPair& pair) {
  const auto& R = *pair.total;
  const auto& f = R.field();
  LiftDivideResult out;
  for (int n = 1; n <= Fprime.length(); ++n)
    out.lifted.push_back(lift_base_matrix(Fprime.diff(n), pair));
  Monomial xm = Monomial::var(pair.x_var);
  for (size_t k = 0; k + 1 < out.lifted.size(); ++k) {
    // sigma_{k+2} = (lifted_{k+1} o lifted_{k+2}) / x, exact division
    GradedMatrix comp = compose(out.lifted[k], out.lifted[k + 1]);
    GradedFreeModule tgt{pair.total, {}};
    for (int d : out.lifted[k].tgt().gen_degrees) tgt.gen_degrees.push_back(d + 1);
    GradedMatrix sig(out.lifted[k + 1].src(), tgt);
    for (int j = 0; j < comp.cols(); ++j)
      for (const auto& [i, p] : comp.column(j)) {
        std::vector<FpPoly::Term> ts;
        for (const auto& [m, c] : p.terms) {
          if (m.exp(pair.x_var) == 0)
            fail(Err::LiftBroken, "composite entry not divisible by x: " + R.to_string(p));
          ts.push_back({m.quotient(xm), c});
        }
        FpPoly q = poly_from_terms(f, std::move(ts));
        if (!q.is_zero()) {
          sig.set_entry(i, j, q);
          out.sigma_zero = false;
        }
      }
    out.sigma.push_back(std::move(sig));
  }
  // observed: sigma commutes with the lifted differential (automatic for the
  // exact-division sigma; recorded, not required)
  auto shift_grading = [&](const GradedMatrix& A) {
    GradedFreeModule src{pair.total, {}}, tgt{pair.total, {}};
    for (int d : A.src().gen_degrees) src.gen_degrees.push_back(d + 1);
    for (int d : A.tgt().gen_degrees) tgt.gen_degrees.push_back(d + 1);
    GradedMatrix B(src, tgt);
    for (int j = 0; j < A.cols(); ++j)
      for (const auto& [i, p] : A.column(j)) B.set_entry(i, j, p);
    return B;
  };
  for (size_t k = 0; k + 1 < out.sigma.size(); ++k) {
    // d_{k+1} o sigma_{k+3} vs sigma_{k+2} o d_{k+3}
    GradedMatrix lhs = compose(shift_grading(out.lifted[k]), out.sigma[k + 1]);
    GradedMatrix rhs = compose(out.sigma[k], out.lifted[k + 2]);
    bool same = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols();
    for (int j = 0; same && j < lhs.cols(); ++j)
      for (int i = 0; same && i < lhs.rows(); ++i)
        if (!(lhs.entry(i, j) == rhs.entry(i, j))) same = false;
    if (!same) out.sigma_chain_map = false;
  }
  return out;
}

ShamashResolution shamash_converse(const Resolution& Fprime, const DeformationPair& pair) {
  const auto& R = *pair.total;
  const auto& f = R.field();
  // x not in m^2 is structural here: x is a variable of degree 1
  auto ld = lift_and_divide(Fprime, pair);
  int len = static_cast<int>(ld.lifted.size());
  ShamashResolution out;
  out.ring = pair.total;
  out.sigma_zero = ld.sigma_zero;
  out.sigma_chain_map = ld.sigma_chain_map;
  for (size_t k = 0; k < ld.sigma.size(); ++k)
    if (!ld.sigma[k].is_zero()) out.sigma_nonzero_steps.push_back(static_cast<int>(k) + 2);

  auto Fdegs = [&](int n) { return Fprime.free_module(n).gen_degrees; };
  out.frees.push_back(GradedFreeModule{pair.total, Fdegs(0)});
  for (int n = 1; n <= len; ++n) {
    GradedFreeModule G{pair.total, {}};
    for (int d : Fdegs(n - 1)) G.gen_degrees.push_back(d + 1);
    for (int d : Fdegs(n)) G.gen_degrees.push_back(d);
    out.frees.push_back(std::move(G));
  }

  for (int n = 1; n <= len; ++n) {
    GradedMatrix D(out.frees[n], out.frees[n - 1]);
    int rows_top = n - 1 == 0 ? 0 : static_cast<int>(Fdegs(n - 2).size());
    int cols_left = static_cast<int>(Fdegs(n - 1).size());
    uint32_t sign = (n - 1) % 2 == 0 ? f.one() : f.neg(f.one()); // (-1)^{n-1}
    // top-left: d_{n-1} on the shifted copies (n >= 2)
    if (n >= 2) {
      const GradedMatrix& dprev = ld.lifted[n - 2];
      for (int j = 0; j < dprev.cols(); ++j)
        for (const auto& [i, p] : dprev.column(j)) D.set_entry(i, j, p);
      // top-right: (-1)^{n-1} sigma_n
      const GradedMatrix& sig = ld.sigma[n - 2];
      for (int j = 0; j < sig.cols(); ++j)
        for (const auto& [i, p] : sig.column(j))
          D.set_entry(i, cols_left + j, poly_scale(f, p, sign));
    }
    // bottom-left: (-1)^{n-1} x * Id on F_{n-1}
    for (int j = 0; j < cols_left; ++j)
      D.set_entry(rows_top + j, j, poly_scale(f, pair.x_poly(), sign));
    // bottom-right: d_n
    const GradedMatrix& dn = ld.lifted[n - 1];
    for (int j = 0; j < dn.cols(); ++j)
      for (const auto& [i, p] : dn.column(j)) D.set_entry(rows_top + i, cols_left + j, p);
    out.diffs.push_back(std::move(D));
  }

  for (int n = 1; n + 1 <= len; ++n) {
    GradedMatrix comp = compose(out.diffs[n - 1], out.diffs[n]);
    if (!comp.is_zero()) fail(Err::Internal, "Shamash differential does not square to zero");
  }
  for (const auto& d : out.diffs)
    if (!d.entries_in_m()) fail(Err::Internal, "Shamash resolution is not minimal");
  return out;
}

LiftTheoremReport verify_theorem_lift(const DeformationPair& pair,
                                      const ModulePresentation& M_over_base, int r, int n_to) {
  LiftTheoremReport rep;
  rep.r = r;
  Resolution Fp = Resolution::of_module(M_over_base, n_to);
  // onsets over the base
  for (int s = 1; s <= r; ++s) {
    int onset = -1;
    for (int n = Fp.length(); n >= 1; --n) {
      if (minors_of_resolution(Fp, n, s).rel == MinorRel::Equal) onset = n;
      else break;
    }
    rep.ell.push_back(onset);
    if (onset < 0) rep.inconclusive = true;
  }
  for (int n = Fp.length(); n >= 1; --n) {
    if (Fp.betti(n) >= r) rep.big_n = n;
    else break;
  }
  if (rep.big_n < 0) rep.inconclusive = true;
  if (!rep.inconclusive) {
    rep.start = rep.big_n;
    for (int s = 1; s <= r; ++s) rep.start = std::max(rep.start, rep.ell[s - 1]);
  }
  // Corollary-5.5 shortcut: if m_base^r != 0, N = ell_r suffices
  rep.shortcut_applies = pair.base->hilbert(r) > 0;
  if (rep.shortcut_applies && !rep.ell.empty() && rep.ell[r - 1] > 0) {
    rep.shortcut_start = rep.ell[r - 1];
    for (int s = 1; s <= r; ++s) rep.shortcut_start = std::max(rep.shortcut_start, rep.ell[s - 1]);
  }

  auto G = shamash_converse(Fp, pair);
  bool base_complete = true;
  for (int n = 1; n <= Fp.length(); ++n)
    base_complete = base_complete && Fp.step_info(n).complete;
  for (int n = 1; n <= G.length(); ++n)
    rep.total_verdicts.push_back(minors_vs_mr(G.diffs[n - 1], n, r, base_complete, base_complete));
  if (!rep.inconclusive) {
    for (int n = rep.start; n <= G.length(); ++n)
      if (rep.total_verdicts[n - 1].rel != MinorRel::Equal) rep.equality_holds = false;
    if (rep.shortcut_start > 0)
      for (int n = rep.shortcut_start; n <= G.length(); ++n)
        if (rep.total_verdicts[n - 1].rel != MinorRel::Equal) rep.equality_holds = false;
  }
  rep.pass = !rep.inconclusive && rep.equality_holds;
  return rep;
}

} // namespace fitres
