#include "fitres/fiber_product.hpp"

#include <algorithm>
#include <set>

namespace fitres {

FiberProductRing fiber_product(RingPtr S, RingPtr T) {
  if (S->field().p() != T->field().p()) fail(Err::FieldMismatch, "factors over different fields");
  std::set<std::string> names(S->var_names().begin(), S->var_names().end());
  for (const auto& n : T->var_names())
    if (names.count(n)) fail(Err::NameClash, "variable " + n + " appears in both factors");
  if (S->nvars() < 1 || T->nvars() < 1)
    fail(Err::HypothesisViolated, "fiber product factors must be non-trivial");

  FiberProductRing fp;
  fp.left = S;
  fp.right = T;
  fp.e1 = S->nvars();
  fp.e2 = T->nvars();

  std::vector<std::string> vars = S->var_names();
  vars.insert(vars.end(), T->var_names().begin(), T->var_names().end());
  auto remap = [&](const FpPoly& p, int offset) {
    FpPoly q;
    for (const auto& [m, c] : p.terms) {
      Monomial mm;
      for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (m.exp(i)) mm.set_exp(i + offset, m.exp(i));
      q.terms.push_back({mm, c});
    }
    std::sort(q.terms.begin(), q.terms.end(),
              [](const auto& a, const auto& b) { return monomial_cmp(a.first, b.first) > 0; });
    return q;
  };
  std::vector<FpPoly> rels;
  for (const auto& g : S->relations()) rels.push_back(remap(g, 0));
  for (const auto& g : T->relations()) rels.push_back(remap(g, fp.e1));
  const auto& f = S->field();
  for (int i = 0; i < fp.e1; ++i)
    for (int j = 0; j < fp.e2; ++j)
      rels.push_back(poly_monomial(f, Monomial::var(i) * Monomial::var(fp.e1 + j), f.one()));
  fp.total = std::make_shared<const RingPresentation>(f, std::move(vars), std::move(rels));

  // H_R(d) = H_S(d) + H_T(d) for d >= 1 (m_R = m_S + m_T with m_S m_T = 0)
  int check_to = 6;
  for (int d = 1; d <= check_to; ++d)
    if (fp.total->hilbert(d) != S->hilbert(d) + T->hilbert(d))
      fail(Err::Internal, "fiber product Hilbert identity failed at degree " + std::to_string(d));
  return fp;
}

FpPoly lift_poly(const FpPoly& p, const FiberProductRing& fp, bool from_left) {
  int offset = from_left ? 0 : fp.e1;
  FpPoly q;
  for (const auto& [m, c] : p.terms) {
    Monomial mm;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
      if (m.exp(i)) mm.set_exp(i + offset, m.exp(i));
    q.terms.push_back({mm, c});
  }
  std::sort(q.terms.begin(), q.terms.end(),
            [](const auto& a, const auto& b) { return monomial_cmp(a.first, b.first) > 0; });
  return fp.total->nf(q);
}

GradedMatrix lift_matrix(const GradedMatrix& A, const FiberProductRing& fp, bool from_left) {
  if (!A.entries_in_m()) fail(Err::NotMinimal, "only minimal maps lift along the fiber product");
  GradedFreeModule src{fp.total, A.src().gen_degrees};
  GradedFreeModule tgt{fp.total, A.tgt().gen_degrees};
  GradedMatrix out(src, tgt);
  for (int j = 0; j < A.cols(); ++j)
    for (const auto& [i, p] : A.column(j)) out.set_entry(i, j, lift_poly(p, fp, from_left));
  return out;
}

std::vector<GradedMatrix> lift_resolution_complex(const Resolution& res,
                                                  const FiberProductRing& fp, bool from_left) {
  std::vector<GradedMatrix> out;
  for (int n = 1; n <= res.length(); ++n) out.push_back(lift_matrix(res.diff(n), fp, from_left));
  return out;
}

ModulePresentation view_left_module_over_total(const ModulePresentation& M,
                                               const FiberProductRing& fp) {
  GradedMatrix A = minimalize(M.presentation);
  GradedMatrix lifted = lift_matrix(A, fp, true);
  const auto& F0 = lifted.tgt();
  GradedFreeModule src{fp.total, lifted.src().gen_degrees};
  for (int i = 0; i < F0.rank(); ++i)
    for (int j = 0; j < fp.e2; ++j) src.gen_degrees.push_back(F0.gen_degrees[i] + 1);
  GradedMatrix out(src, F0);
  for (int j = 0; j < lifted.cols(); ++j)
    for (const auto& [i, p] : lifted.column(j)) out.set_entry(i, j, p);
  int col = lifted.cols();
  for (int i = 0; i < F0.rank(); ++i)
    for (int j = 0; j < fp.e2; ++j)
      out.set_entry(i, col++, fp.total->var_poly(fp.right_var(j)));
  return ModulePresentation{fp.total, std::move(out)};
}

std::string MooreWord::to_string() const {
  std::string s;
  if (a > 0) s += "F" + std::to_string(a);
  for (const auto& [i, j] : pairs) {
    if (!s.empty()) s += "*";
    s += "E" + std::to_string(i) + "F" + std::to_string(j);
  }
  if (!s.empty()) s += "*";
  s += "P" + std::to_string(b);
  return s;
}

namespace {

// word enumeration ordered by (pair count, a, pairs lex, b)
void enumerate_words(int n, const std::vector<int>& rkE, const std::vector<int>& rkF,
                     const std::vector<int>& rkP, std::vector<MooreWord>& out) {
  auto rank_at = [](const std::vector<int>& rk, int i) {
    return i < static_cast<int>(rk.size()) ? rk[i] : 0;
  };
  int max_pairs = n / 2;
  for (int k = 0; k <= max_pairs; ++k) {
    std::vector<MooreWord> found;
    std::vector<std::pair<int, int>> pairs(k);
    std::function<void(int, int)> rec = [&](int t, int rem) {
      if (t == k) {
        // remaining = a + b
        for (int a = 0; a <= rem; ++a) {
          int b = rem - a;
          if (a > 0 && rank_at(rkF, a) == 0) continue;
          if (rank_at(rkP, b) == 0) continue;
          MooreWord w;
          w.a = a;
          w.pairs = pairs;
          w.b = b;
          found.push_back(std::move(w));
        }
        return;
      }
      for (int i = 1; i <= rem - 1 - 2 * (k - t - 1); ++i) {
        if (rank_at(rkE, i) == 0) continue;
        for (int j = 1; i + j <= rem - 2 * (k - t - 1); ++j) {
          if (rank_at(rkF, j) == 0) continue;
          pairs[t] = {i, j};
          rec(t + 1, rem - i - j);
        }
      }
    };
    rec(0, n);
    std::sort(found.begin(), found.end(), [](const MooreWord& x, const MooreWord& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.pairs != y.pairs) return x.pairs < y.pairs;
      return x.b < y.b;
    });
    for (auto& w : found) out.push_back(std::move(w));
  }
}

} // namespace

int MooreResolution::find_word(int n, const MooreWord& w) const {
  const auto& ws = words[n];
  for (size_t i = 0; i < ws.size(); ++i)
    if (ws[i] == w) return static_cast<int>(i);
  return -1;
}

std::string MooreResolution::audit_block_shape(int n) const {
  const auto& bs = blocks[n - 1];
  std::vector<int> per_col(words[n].size(), 0), per_row(words[n - 1].size(), 0);
  for (const auto& b : bs) {
    per_col[b.src_word]++;
    per_row[b.tgt_word]++;
  }
  for (size_t c = 0; c < per_col.size(); ++c)
    if (per_col[c] != 1)
      return "source word " + words[n][c].to_string() + " has " + std::to_string(per_col[c]) +
             " blocks";
  for (size_t t = 0; t < per_row.size(); ++t) {
    // structural sources of a target word w': (a'+1, w', b') via dF and either
    // (0,[(1,a'),w'],b') via dE_1 (a' >= 1), (0,[(i1+1,j1),rest],b') via dE,
    // or (0,[],b'+1) via dP
    const MooreWord& w = words[n - 1][t];
    int expected = 0;
    {
      MooreWord s = w;
      s.a = w.a + 1;
      if (find_word(n, s) >= 0) ++expected;
    }
    if (w.a >= 1) {
      MooreWord s = w;
      s.a = 0;
      s.pairs.insert(s.pairs.begin(), {1, w.a});
      if (find_word(n, s) >= 0) ++expected;
    } else if (!w.pairs.empty()) {
      MooreWord s = w;
      s.pairs[0].first++;
      if (find_word(n, s) >= 0) ++expected;
    } else {
      MooreWord s = w;
      s.b = w.b + 1;
      if (find_word(n, s) >= 0) ++expected;
    }
    if (per_row[t] != expected || per_row[t] > 2)
      return "target word " + w.to_string() + " has " + std::to_string(per_row[t]) +
             " blocks (expected " + std::to_string(expected) + ")";
  }
  return "";
}

MooreResolution moore_resolution(const ModulePresentation& M_over_S,
                                 const FiberProductRing& fp, int n_max) {
  // component resolutions over the factors
  Resolution E = Resolution::of_module(residue_field_presentation(fp.left), n_max);
  Resolution Fr = Resolution::of_module(residue_field_presentation(fp.right), n_max);
  Resolution P = Resolution::of_module(M_over_S, n_max);
  if (!E.finite() && E.length() < n_max) fail(Err::DepthTooLow, "E depth");
  if (!Fr.finite() && Fr.length() < n_max) fail(Err::DepthTooLow, "F depth");
  if (!P.finite() && P.length() < n_max) fail(Err::DepthTooLow, "P depth");

  auto ranks = [](const Resolution& r, int n_max_) {
    std::vector<int> rk;
    for (int n = 0; n <= n_max_; ++n) rk.push_back(r.betti(n));
    return rk;
  };
  std::vector<int> rkE = ranks(E, n_max), rkF = ranks(Fr, n_max), rkP = ranks(P, n_max);

  // lifted differentials (index 1..len)
  auto liftedE = lift_resolution_complex(E, fp, true);
  auto liftedF = lift_resolution_complex(Fr, fp, false);
  auto liftedP = lift_resolution_complex(P, fp, true);

  // generator degrees of the component free modules, lifted verbatim
  auto degs = [&](const Resolution& r, int n) {
    return n <= r.length() ? r.free_module(n).gen_degrees : std::vector<int>{};
  };

  MooreResolution out;
  out.ring = fp.total;
  out.words.resize(n_max + 1);
  out.word_offsets.resize(n_max + 1);
  out.frees.assign(n_max + 1, GradedFreeModule{fp.total, {}});

  // degree vector of a word: iterated sum with the leftmost factor fastest
  auto word_degrees = [&](const MooreWord& w) {
    std::vector<int> acc{0};
    auto mix = [&](const std::vector<int>& factor) {
      std::vector<int> next;
      next.reserve(factor.size() * acc.size());
      for (int rest : acc)
        for (int d : factor) next.push_back(d + rest);
      // leftmost fastest: factor index varies first; we accumulate left to
      // right, so each new factor becomes the SLOW index: iterate rest outer
      acc = std::move(next);
      (void)factor;
    };
    // build left-to-right with leftmost fastest: process factors in reverse
    std::vector<std::vector<int>> factors;
    if (w.a > 0) factors.push_back(degs(Fr, w.a));
    for (const auto& [i, j] : w.pairs) {
      factors.push_back(degs(E, i));
      factors.push_back(degs(Fr, j));
    }
    factors.push_back(degs(P, w.b));
    acc = {0};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) mix(*it);
    return acc;
  };

  for (int n = 0; n <= n_max; ++n) {
    enumerate_words(n, rkE, rkF, rkP, out.words[n]);
    auto& offsets = out.word_offsets[n];
    for (const auto& w : out.words[n]) {
      offsets.push_back(out.frees[n].rank());
      for (int d : word_degrees(w)) out.frees[n].gen_degrees.push_back(d);
    }
  }

  out.blocks.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    GradedMatrix D(out.frees[n], out.frees[n - 1]);
    auto& blocks = out.blocks[n - 1];
    for (size_t wi = 0; wi < out.words[n].size(); ++wi) {
      const MooreWord& w = out.words[n][wi];
      MooreWord tgt;
      const GradedMatrix* component = nullptr;
      char kind;
      int which;
      int left_rank_src, left_rank_tgt;
      if (w.a >= 1) {
        tgt = w;
        tgt.a = w.a - 1;
        component = &liftedF[w.a - 1];
        kind = 'F';
        which = w.a;
        left_rank_src = rkF[w.a];
        left_rank_tgt = w.a - 1 == 0 ? 1 : rkF[w.a - 1];
      } else if (!w.pairs.empty()) {
        int i1 = w.pairs[0].first;
        tgt = w;
        if (i1 >= 2) {
          tgt.pairs[0].first = i1 - 1;
        } else {
          tgt.pairs.erase(tgt.pairs.begin());
          tgt.a = w.pairs[0].second;
        }
        component = &liftedE[i1 - 1];
        kind = 'E';
        which = i1;
        left_rank_src = rkE[i1];
        left_rank_tgt = i1 - 1 == 0 ? 1 : rkE[i1 - 1];
      } else {
        if (w.b == 0) fail(Err::Internal, "word P0 has no differential");
        tgt = w;
        tgt.b = w.b - 1;
        component = &liftedP[w.b - 1];
        kind = 'P';
        which = w.b;
        left_rank_src = rkP[w.b];
        left_rank_tgt = rkP[w.b - 1];
      }
      int ti = out.find_word(n - 1, tgt);
      if (ti < 0) fail(Err::Internal, "target word missing: " + tgt.to_string());
      int src_off = out.word_offsets[n][wi];
      int tgt_off = out.word_offsets[n - 1][ti];
      int src_rank = left_rank_src == 0 ? 0 : 1;
      // copies = rank of the rest of the word
      int word_rank = 1;
      {
        int r = 1;
        if (w.a > 0) r *= rkF[w.a];
        for (const auto& [i, j] : w.pairs) r *= rkE[i] * rkF[j];
        r *= rkP[w.b];
        word_rank = r;
      }
      (void)src_rank;
      int copies = left_rank_src ? word_rank / left_rank_src : 0;
      blocks.push_back(MooreBlock{static_cast<int>(wi), ti, kind, which, copies, tgt_off, src_off});
      // leftmost factor fastest: entry ((t, rest), (s, rest))
      for (int j = 0; j < component->cols(); ++j)
        for (const auto& [i, p] : component->column(j))
          for (int rest = 0; rest < copies; ++rest)
            D.set_entry(tgt_off + i + left_rank_tgt * rest, src_off + j + left_rank_src * rest,
                        p);
    }
    out.diffs.push_back(std::move(D));
  }

  // the assembled complex must square to zero (mixed products vanish in R)
  for (int n = 1; n + 1 <= n_max; ++n) {
    GradedMatrix comp = compose(out.diffs[n - 1], out.diffs[n]);
    if (!comp.is_zero()) fail(Err::Internal, "Moore differential does not square to zero");
  }
  return out;
}

FpTheoremReport verify_theorem_fp(const FiberProductRing& fp, const ModulePresentation& M,
                                  int r, int n_to, bool observe) {
  FpTheoremReport rep;
  int e = fp.total->embdim();
  if (e < 3) {
    rep.hypothesis_ok = false;
    rep.hypothesis_note = "embdim(R) = " + std::to_string(e) + " < 3";
    if (!observe) fail(Err::HypothesisViolated, rep.hypothesis_note);
  }
  Resolution res = Resolution::of_module(M, n_to);
  for (int n = 1; n <= res.length(); ++n)
    if (res.betti(n) == 0) {
      rep.infinite_projdim = false;
      rep.hypothesis_note += (rep.hypothesis_note.empty() ? "" : "; ");
      rep.hypothesis_note += "finite projective dimension";
      if (!observe) fail(Err::HypothesisViolated, "module has finite projective dimension");
    }
  for (int rr = 1; rr <= r; ++rr) {
    TheoremRangeReport tr;
    tr.r = rr;
    tr.bound = (2 * rr + fp.e1 * fp.e2 - 1) / (fp.e1 * fp.e2) + 8;
    for (int n = 1; n <= res.length(); ++n) {
      tr.verdicts.push_back(minors_of_resolution(res, n, rr));
      if (res.betti(n) >= rr && tr.beta_onset < 0) tr.beta_onset = n;
      if (res.betti(n) < rr) tr.beta_onset = -1; // must persist
    }
    for (int n = res.length(); n >= 1; --n) {
      if (tr.verdicts[n - 1].rel == MinorRel::Equal) tr.onset = n;
      else break;
    }
    if (tr.onset < 0) tr.persists = false;
    for (int n = std::min(tr.bound, res.length()); n <= res.length(); ++n)
      if (tr.verdicts[n - 1].rel != MinorRel::Equal) tr.bound_respected = false;
    bool pass = tr.onset > 0 && tr.bound_respected &&
                (res.length() < tr.bound || tr.onset <= tr.bound);
    rep.all_pass = rep.all_pass && pass;
    rep.per_r.push_back(std::move(tr));
  }
  return rep;
}

} // namespace fitres
