#include "fitres/property.hpp"

#include <functional>
#include <sstream>

#include "fitres/prng.hpp"
#include "fitres/stretched.hpp"

namespace fitres {

namespace {

struct Gen {
  Prng rng;
  std::vector<RingPtr> pool;

  explicit Gen(uint64_t seed) : rng(seed) {
    pool.push_back(make_ring(101, {"x"}, {"x^3"}));
    pool.push_back(make_ring(101, {"x", "y"}, {"x*y"}));
    pool.push_back(make_ring(101, {"x1", "x2"}, {"x1x2", "x1^2-x2^2"}));
    pool.push_back(make_ring(101, {"x1", "x2", "x3"},
                             {"x1x2", "x1x3", "x2x3", "x1^2-x2^2", "x1^2-x3^2"}));
    pool.push_back(make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"}));
  }

  RingPtr ring() { return pool[rng.below(pool.size())]; }

  FpPoly homogeneous(const RingPtr& R, int d, bool allow_zero = true) {
    const auto& f = R->field();
    const auto& mons = R->std_monomials(d);
    if (mons.empty()) return FpPoly{};
    std::vector<FpPoly::Term> ts;
    int terms = rng.range(allow_zero ? 0 : 1, 2);
    for (int t = 0; t < terms; ++t) {
      uint32_t c = static_cast<uint32_t>(rng.range(1, 100));
      ts.push_back({mons[rng.below(mons.size())], c});
    }
    return poly_from_terms(f, std::move(ts));
  }

  // minimal homogeneous matrix: entries in m, degrees 1..2
  GradedMatrix minimal_matrix(const RingPtr& R, int max_rows, int max_cols) {
    int rows = rng.range(1, max_rows);
    int cols = rng.range(1, max_cols);
    std::vector<int> tdeg, sdeg;
    for (int i = 0; i < rows; ++i) tdeg.push_back(rng.range(0, 1));
    for (int j = 0; j < cols; ++j) sdeg.push_back(rng.range(1, 2) + 1);
    GradedMatrix A({R, sdeg}, {R, tdeg});
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) {
        int d = sdeg[j] - tdeg[i];
        if (d < 1) continue;
        A.set_entry(i, j, homogeneous(R, d));
      }
    return A;
  }
};

std::string matrix_repro(const GradedMatrix& A) {
  std::ostringstream os;
  os << "  ring: " << A.ring()->describe() << "\n";
  os << "  target_degrees:";
  for (int d : A.tgt().gen_degrees) os << " " << d;
  os << "\n";
  for (int i = 0; i < A.rows(); ++i) {
    os << "  row";
    for (int j = 0; j < A.cols(); ++j)
      os << (j ? ", " : " ") << A.ring()->to_string(A.entry(i, j));
    os << "\n";
  }
  return os.str();
}

// drop-a-row / drop-a-column / zero-an-entry shrinking while `fails` holds
GradedMatrix shrink_matrix(const GradedMatrix& A0,
                           const std::function<bool(const GradedMatrix&)>& fails) {
  GradedMatrix A = A0;
  bool changed = true;
  auto drop = [&](bool drop_row, int k) {
    GradedFreeModule src{A.ring(), {}}, tgt{A.ring(), {}};
    for (int j = 0; j < A.cols(); ++j)
      if (drop_row || j != k) src.gen_degrees.push_back(A.src().gen_degrees[j]);
    for (int i = 0; i < A.rows(); ++i)
      if (!drop_row || i != k) tgt.gen_degrees.push_back(A.tgt().gen_degrees[i]);
    GradedMatrix B(src, tgt);
    int jc = 0;
    for (int j = 0; j < A.cols(); ++j) {
      if (!drop_row && j == k) continue;
      int ic = 0;
      for (int i = 0; i < A.rows(); ++i) {
        if (drop_row && i == k) continue;
        const auto& p = A.entry(i, j);
        if (!p.is_zero()) B.set_entry(ic, jc, p);
        ++ic;
      }
      ++jc;
    }
    return B;
  };
  while (changed) {
    changed = false;
    for (int i = 0; i < A.rows() && A.rows() > 1; ++i) {
      GradedMatrix B = drop(true, i);
      if (fails(B)) {
        A = std::move(B);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (int j = 0; j < A.cols() && A.cols() > 1; ++j) {
      GradedMatrix B = drop(false, j);
      if (fails(B)) {
        A = std::move(B);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (int j = 0; j < A.cols() && !changed; ++j)
      for (int i = 0; i < A.rows() && !changed; ++i) {
        if (A.entry(i, j).is_zero()) continue;
        GradedMatrix B = A;
        B.set_entry(i, j, FpPoly{});
        if (fails(B)) {
          A = std::move(B);
          changed = true;
        }
      }
  }
  return A;
}

using Check = std::function<std::string(Gen&)>; // empty string = pass

PropertyResult run_cases(const std::string& name, int cases, uint64_t seed, Check check) {
  PropertyResult r;
  r.name = name;
  Gen gen(seed);
  for (int c = 0; c < cases; ++c) {
    r.cases_run = c + 1;
    std::string ce;
    try {
      ce = check(gen);
    } catch (const EngineError& e) {
      ce = std::string("exception: ") + e.what() + "\n";
    }
    if (!ce.empty()) {
      r.passed = false;
      r.counterexample = ce;
      return r;
    }
  }
  return r;
}

} // namespace

std::string PropertySuiteReport::to_text() const {
  std::ostringstream os;
  os << "property suite: seed=" << seed << " size=" << size << " cases=" << cases << "\n";
  for (const auto& r : results) {
    os << "  " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.cases_run
       << " cases)\n";
    if (!r.passed) os << "  reproducer:\n" << r.counterexample;
  }
  return os.str();
}

PropertySuiteReport run_property_suite(uint64_t seed, int size, int cases) {
  PropertySuiteReport rep;
  rep.seed = seed;
  rep.size = size;
  rep.cases = cases;
  int msize = std::max(2, std::min(size, 4));

  // ring axioms and homogeneity of products
  rep.results.push_back(run_cases("arith/ring-axioms", cases, seed ^ 0x1, [&](Gen& g) {
    auto R = g.ring();
    const auto& f = R->field();
    int d = g.rng.range(1, 2);
    FpPoly a = g.homogeneous(R, d), b = g.homogeneous(R, d), c = g.homogeneous(R, g.rng.range(1, 2));
    FpPoly lhs = poly_mul(f, poly_add(f, a, b), c);
    FpPoly rhs = poly_add(f, poly_mul(f, a, c), poly_mul(f, b, c));
    if (!(lhs == rhs)) return std::string("distributivity failed");
    FpPoly assoc1 = poly_mul(f, poly_mul(f, a, b), c);
    FpPoly assoc2 = poly_mul(f, a, poly_mul(f, b, c));
    if (!(assoc1 == assoc2)) return std::string("associativity failed");
    if (!poly_mul(f, a, b).is_zero() && poly_mul(f, a, b).degree() != a.degree() + b.degree())
      return std::string("degree additivity failed");
    if (!poly_mul(f, a, b).is_homogeneous()) return std::string("homogeneity lost");
    return std::string();
  }));

  // monomial order: total, antisymmetric, transitive, degree-compatible
  rep.results.push_back(run_cases("arith/degrevlex", cases, seed ^ 0x2, [&](Gen& g) {
    int nv = g.rng.range(1, 4);
    auto rand_mono = [&](int dmax) {
      Monomial m;
      for (int i = 0; i < nv; ++i) m.set_exp(i, g.rng.range(0, dmax));
      return m;
    };
    Monomial a = rand_mono(3), b = rand_mono(3), c = rand_mono(3);
    if (monomial_cmp(a, a) != 0) return std::string("not reflexive");
    if (monomial_cmp(a, b) != -monomial_cmp(b, a)) return std::string("not antisymmetric");
    if (monomial_cmp(a, b) < 0 && monomial_cmp(b, c) < 0 && monomial_cmp(a, c) >= 0)
      return std::string("not transitive");
    if (a.degree() < b.degree() && monomial_cmp(a, b) >= 0)
      return std::string("not degree-compatible");
    return std::string();
  }));

  // graded-ring: normal form idempotence, socle annihilation, self-comparison
  rep.results.push_back(run_cases("ring/nf-socle", std::max(cases / 4, 20), seed ^ 0x3,
                                  [&](Gen& g) {
    auto R = g.ring();
    FpPoly p = g.homogeneous(R, g.rng.range(1, 3));
    if (!(R->nf(R->nf(p)) == R->nf(p))) return std::string("normal form not idempotent");
    if (R->is_artinian()) {
      GradedIdeal soc = socle(R);
      for (const auto& s : soc.generators())
        for (int v = 0; v < R->nvars(); ++v)
          if (!R->nf_mul(s, R->var_poly(v)).is_zero())
            return std::string("socle generator not annihilated by m");
      auto cmp = ideal_compare(soc, soc, soc.max_generator_degree());
      if (cmp.rel != IdealRel::Equal) return std::string("ideal_compare(a,a) != equal");
    }
    return std::string();
  }));

  // Prop-2.2-style: minors of minimal matrices land in m^r
  rep.results.push_back(run_cases("minors/in-mr", cases, seed ^ 0x4, [&](Gen& g) {
    auto R = g.ring();
    GradedMatrix A = g.minimal_matrix(R, msize, msize);
    for (int r = 1; r <= std::min({3, A.rows(), A.cols()}); ++r) {
      if (!check_minors_in_mr(A, r)) return matrix_repro(A);
    }
    return std::string();
  }));

  // Lemma-2.3-style: product of minors of A inside minors of a bordered B
  rep.results.push_back(run_cases("minors/tensor-law", cases, seed ^ 0x5, [&](Gen& g) {
    auto R = g.ring();
    GradedMatrix A = g.minimal_matrix(R, 2, 2);
    int ell = 2;
    GradedMatrix K = kron_with_identity(A, ell);
    // border with one extra random row and column
    GradedFreeModule src{R, K.src().gen_degrees}, tgt{R, K.tgt().gen_degrees};
    src.gen_degrees.push_back(2);
    tgt.gen_degrees.push_back(0);
    GradedMatrix B(src, tgt);
    std::vector<int> row_idx, col_idx;
    for (int i = 0; i < K.rows(); ++i) row_idx.push_back(i);
    for (int j = 0; j < K.cols(); ++j) col_idx.push_back(j);
    for (int j = 0; j < K.cols(); ++j)
      for (const auto& [i, p] : K.column(j)) B.set_entry(i, j, p);
    for (int i = 0; i < B.rows(); ++i) {
      int d = B.src().gen_degrees[B.cols() - 1] - B.tgt().gen_degrees[i];
      if (d >= 1) B.set_entry(i, B.cols() - 1, g.homogeneous(R, d));
    }
    for (int j = 0; j + 1 < B.cols(); ++j) {
      int d = B.src().gen_degrees[j] - B.tgt().gen_degrees[B.rows() - 1];
      if (d >= 1) B.set_entry(B.rows() - 1, j, g.homogeneous(R, d));
    }
    // random composition of r <= 2 into ell parts (zeros allowed)
    int r = g.rng.range(1, 2);
    std::vector<int> comp(ell, 0);
    for (int t = 0; t < r; ++t) comp[g.rng.below(ell)]++;
    if (!check_tensor_submatrix_law(A, ell, B, comp, row_idx, col_idx)) return matrix_repro(B);
    return std::string();
  }));

  // Prop-2.4-style: block-diagonal sum and the shifted-resolution identity
  rep.results.push_back(run_cases("minors/summand", cases, seed ^ 0x6, [&](Gen& g) {
    auto R = g.ring();
    GradedMatrix An = g.minimal_matrix(R, 2, 2);
    GradedMatrix Am = g.minimal_matrix(R, 2, 2);
    // M = coker(An (+) Am), N = coker(An): I_{m,r}(N) <= I_{m,r}(M)
    GradedFreeModule src{R, An.src().gen_degrees}, tgt{R, An.tgt().gen_degrees};
    for (int d : Am.src().gen_degrees) src.gen_degrees.push_back(d);
    for (int d : Am.tgt().gen_degrees) tgt.gen_degrees.push_back(d);
    GradedMatrix D(src, tgt);
    for (int j = 0; j < An.cols(); ++j)
      for (const auto& [i, p] : An.column(j)) D.set_entry(i, j, p);
    for (int j = 0; j < Am.cols(); ++j)
      for (const auto& [i, p] : Am.column(j))
        D.set_entry(An.rows() + i, An.cols() + j, p);
    Resolution resM = Resolution::of_module(coker_presentation(D), 3);
    Resolution resN = Resolution::of_module(coker_presentation(An), 3);
    int top = std::min({3, resM.length(), resN.length()});
    for (int mm = 1; mm <= top; ++mm)
      for (int r = 1; r <= 2; ++r)
        if (!check_summand_inclusion(resM, resN, 0, mm, r)) return matrix_repro(D);
    // N = Omega_1(M): I_{m,r}(Omega_1 M) = I_{m+1,r}(M)
    if (resM.length() >= 2) {
      Resolution resO = Resolution::of_image(resM.diff(1), resM.length() - 1);
      for (int mm = 1; mm + 1 <= resM.length() && mm <= resO.length(); ++mm)
        for (int r = 1; r <= 2; ++r) {
          GradedIdeal a = minors_ideal(resO.diff(mm), r);
          GradedIdeal b = minors_ideal(resM.diff(mm + 1), r);
          int cap = std::max(a.max_generator_degree(), b.max_generator_degree());
          if (ideal_compare(a, b, cap).rel != IdealRel::Equal) return matrix_repro(D);
        }
    }
    return std::string();
  }));

  // basis independence of Betti numbers and minor ideals
  rep.results.push_back(run_cases("minors/basis-independence", cases, seed ^ 0x7,
                                  [&](Gen& g) {
    auto R = g.ring();
    const auto& f = R->field();
    GradedMatrix A = g.minimal_matrix(R, msize, msize);
    // U, V unit upper-triangular with homogeneous fill where degrees allow
    GradedMatrix B(A.src(), A.tgt());
    // B = U A V computed entrywise: first A V (column ops), then U (row ops)
    GradedMatrix AV = A;
    for (int j = 0; j < A.cols(); ++j)
      for (int k = j + 1; k < A.cols(); ++k) {
        int d = AV.src().gen_degrees[k] - AV.src().gen_degrees[j];
        if (d < 0) continue;
        FpPoly c = d == 0 ? poly_constant(f, static_cast<uint32_t>(g.rng.range(0, 3)))
                          : g.homogeneous(R, d);
        AV.add_column_multiple(k, j, c);
      }
    // row operations via transpose trick: apply column ops on the transpose
    GradedFreeModule td{R, {}}, sd{R, {}};
    for (int d : AV.tgt().gen_degrees) td.gen_degrees.push_back(-d);
    for (int d : AV.src().gen_degrees) sd.gen_degrees.push_back(-d);
    // grading with negated degrees keeps transposed entries homogeneous
    GradedMatrix T = AV.transpose_with(td, sd);
    for (int j = 0; j < T.cols(); ++j)
      for (int k = j + 1; k < T.cols(); ++k) {
        int d = T.src().gen_degrees[k] - T.src().gen_degrees[j];
        if (d < 0) continue;
        FpPoly c = d == 0 ? poly_constant(f, static_cast<uint32_t>(g.rng.range(0, 3)))
                          : g.homogeneous(R, d);
        T.add_column_multiple(k, j, c);
      }
    GradedMatrix UAV = T.transpose_with(A.src(), A.tgt());
    Resolution r1 = [&] {
      try {
        return Resolution::of_module(coker_presentation(A), 3);
      } catch (const EngineError& e) {
        throw EngineError(Err::Internal, std::string(e.what()) + " on A\n" + matrix_repro(A));
      }
    }();
    Resolution r2 = [&] {
      try {
        return Resolution::of_module(coker_presentation(UAV), 3);
      } catch (const EngineError& e) {
        throw EngineError(Err::Internal,
                          std::string(e.what()) + " on UAV\n" + matrix_repro(UAV));
      }
    }();
    if (r1.length() != r2.length()) return "length mismatch\n" + matrix_repro(A);
    for (int n = 0; n <= r1.length(); ++n)
      if (r1.betti(n) != r2.betti(n)) return "betti mismatch\n" + matrix_repro(A);
    for (int n = 1; n <= r1.length(); ++n)
      for (int r = 1; r <= 2; ++r) {
        GradedIdeal a = minors_ideal(r1.diff(n), r);
        GradedIdeal b = minors_ideal(r2.diff(n), r);
        int cap = std::max({a.max_generator_degree(), b.max_generator_degree(), 0});
        if (ideal_compare(a, b, cap).rel != IdealRel::Equal)
          return "minor ideal mismatch at n=" + std::to_string(n) + "\n" + matrix_repro(A);
      }
    return std::string();
  }));

  // Laplace cofactor expansion vs permutation sum on random 3x3
  rep.results.push_back(run_cases("minors/laplace", cases, seed ^ 0x8, [&](Gen& g) {
    auto R = g.ring();
    const auto& f = R->field();
    std::vector<int> sdeg{2, 2, 2}, tdeg{0, 0, 0};
    GradedMatrix A({R, sdeg}, {R, tdeg});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A.set_entry(i, j, g.homogeneous(R, 2));
    FpPoly cof = minor_det(A, {0, 1, 2}, {0, 1, 2});
    // permutation sum
    int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int sign[6] = {1, -1, -1, 1, 1, -1};
    FpPoly acc;
    for (int t = 0; t < 6; ++t) {
      FpPoly prod = poly_constant(f, f.one());
      for (int i = 0; i < 3; ++i) prod = poly_mul(f, prod, A.entry(i, perm[t][i]));
      if (sign[t] < 0) prod = poly_neg(f, prod);
      acc = poly_add(f, acc, prod);
    }
    if (!(R->nf(acc) == cof)) return matrix_repro(A);
    return std::string();
  }));

  // minimalize: prune units, cokernel Hilbert function preserved
  rep.results.push_back(run_cases("resolutions/minimalize", std::max(cases / 4, 20),
                                  seed ^ 0x9, [&](Gen& g) {
    auto R = g.ring();
    const auto& f = R->field();
    GradedMatrix A = g.minimal_matrix(R, msize, msize);
    // plant a unit entry where degrees allow
    GradedFreeModule src{R, A.src().gen_degrees}, tgt{R, A.tgt().gen_degrees};
    src.gen_degrees.push_back(tgt.gen_degrees[0]);
    GradedMatrix B(src, tgt);
    for (int j = 0; j < A.cols(); ++j)
      for (const auto& [i, p] : A.column(j)) B.set_entry(i, j, p);
    B.set_entry(0, A.cols(), poly_constant(f, 1 + static_cast<uint32_t>(g.rng.range(0, 99))));
    GradedMatrix Bm = minimalize(B);
    auto fails = [&](const GradedMatrix& M) {
      if (!M.entries_in_m()) return true;
      ModulePresentation m1{R, B}, m2{R, M};
      for (int d = 0; d <= 4; ++d)
        if (m1.hilbert(d) != m2.hilbert(d)) return true;
      return false;
    };
    if (fails(Bm)) return matrix_repro(shrink_matrix(B, [&](const GradedMatrix& M) {
             return fails(minimalize(M));
           }));
    return std::string();
  }));

  // Prop-4.4-style growth on random modules over random artinian pool rings
  rep.results.push_back(run_cases("resolutions/betti-growth", std::max(cases / 4, 20),
                                  seed ^ 0xa, [&](Gen& g) {
    RingPtr R = g.ring();
    if (!R->is_artinian()) return std::string();
    GradedMatrix A = g.minimal_matrix(R, msize, msize);
    Resolution res = Resolution::of_module(coker_presentation(A), 4);
    auto grep = betti_growth_check(res);
    if (!grep.all_hold) return matrix_repro(A);
    return std::string();
  }));

  // Prop-4.6-style: every differential past mu over an e >= 3 stretched ring
  // has a column killed by x_e after the residue reduction
  rep.results.push_back(run_cases("stretched/annihilated-generator",
                                  std::max(cases / 8, 10), seed ^ 0xb, [&](Gen& g) {
    static StretchedGorensteinRing sg = build_stretched(101, 3, 2, {1, 1});
    GradedMatrix A = g.minimal_matrix(sg.ring, 2, 3);
    Resolution res = Resolution::of_module(coker_presentation(A), 3);
    const auto& R = *sg.ring;
    for (int n = 2; n <= res.length(); ++n) {
      // the lemma needs strictly more columns than rows
      if (res.betti(n) <= res.betti(n - 1)) continue;
      auto ann = find_annihilated_generator(res.diff(n), sg);
      for (const auto& [i, p] : ann.transformed.column(ann.column))
        if (!R.nf_mul(p, R.var_poly(sg.e - 1)).is_zero())
          return "annihilation failed\n" + matrix_repro(res.diff(n));
    }
    return std::string();
  }));

  for (const auto& r : rep.results) rep.all_pass = rep.all_pass && r.passed;
  return rep;
}

} // namespace fitres
