#include "fitres/minors.hpp"

namespace fitres {

namespace {

FpPoly det_rec(const GradedMatrix& A, std::vector<int>& rows, const std::vector<int>& cols,
               size_t col_pos) {
  const auto& R = *A.ring();
  const auto& f = R.field();
  if (col_pos == cols.size()) return poly_constant(f, f.one());
  FpPoly acc;
  for (size_t k = 0; k < rows.size(); ++k) {
    int i = rows[k];
    if (i < 0) continue;
    const FpPoly& a = A.entry(i, cols[col_pos]);
    if (a.is_zero()) continue;
    rows[k] = -1;
    FpPoly sub = det_rec(A, rows, cols, col_pos + 1);
    rows[k] = i;
    if (sub.is_zero()) continue;
    FpPoly term = poly_mul(f, a, sub);
    // sign: number of remaining rows above position k
    int skipped = 0;
    for (size_t t = 0; t < k; ++t)
      if (rows[t] >= 0) ++skipped;
    if (skipped % 2 == 1) term = poly_neg(f, term);
    acc = poly_add(f, acc, term);
  }
  return acc;
}

} // namespace

FpPoly minor_det(const GradedMatrix& A, const std::vector<int>& rows,
                 const std::vector<int>& cols) {
  if (rows.size() != cols.size()) fail(Err::Internal, "minor format mismatch");
  std::vector<int> rw = rows;
  return A.ring()->nf(det_rec(A, rw, cols, 0));
}

long minor_enumeration_count(const GradedMatrix& A, int r) {
  auto choose = [](long n, long k) -> long {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) {
      r = r * (n - i) / (i + 1);
      if (r > 100000000L) return 100000000L;
    }
    return r;
  };
  long c = choose(A.rows(), r);
  long d = choose(A.cols(), r);
  if (c > 0 && d > 100000000L / c) return 100000000L;
  return c * d;
}

namespace {

template <class Fn>
void for_each_subset(int n, int r, Fn&& fn) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  while (true) {
    if (!fn(idx)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

GradedIdeal minors_ideal(const GradedMatrix& A, int r, long budget) {
  RingPtr ring = A.ring();
  if (r == 0) return GradedIdeal::unit(ring);
  if (r > A.rows() || r > A.cols()) return GradedIdeal::zero(ring);
  if (minor_enumeration_count(A, r) > budget)
    fail(Err::Internal, "minor enumeration exceeds budget; use minors_of_resolution");
  std::vector<FpPoly> gens;
  for_each_subset(A.rows(), r, [&](const std::vector<int>& rows) {
    // prune all-zero-row submatrices early
    for_each_subset(A.cols(), r, [&](const std::vector<int>& cols) {
      bool zero_row = false;
      for (int i : rows) {
        bool any = false;
        for (int j : cols)
          if (!A.entry(i, j).is_zero()) {
            any = true;
            break;
          }
        if (!any) {
          zero_row = true;
          break;
        }
      }
      if (!zero_row) {
        FpPoly d = minor_det(A, rows, cols);
        if (!d.is_zero()) gens.push_back(std::move(d));
      }
      return true;
    });
    return true;
  });
  return GradedIdeal(ring, std::move(gens));
}

namespace {

// Feeds the degree-r span of I_r(A) (spanned by the determinants of
// submatrices with column-degree sum minus row-degree sum equal to r) into an
// eliminator over R_r, stopping once the span is full.
struct SpanFill {
  const GradedMatrix& A;
  int r;
  Eliminator span;
  int full_dim;
  std::vector<FpPoly> minors; // nonzero degree-r minors encountered (capped)
  bool exhausted = true;
  long evaluated = 0;
  long budget;

  SpanFill(const GradedMatrix& a, int rr, long budget_)
      : A(a), r(rr), span(a.ring()->field(), a.ring()->hilbert(rr), false),
        full_dim(a.ring()->hilbert(rr)), budget(budget_) {}

  bool full() const { return span.rank() == full_dim; }

  // returns false to stop enumeration
  bool feed(const std::vector<int>& rows, const std::vector<int>& cols) {
    ++evaluated;
    if (evaluated > budget) {
      exhausted = false;
      return false;
    }
    FpPoly d = minor_det(A, rows, cols);
    if (d.is_zero()) return true;
    if (minors.size() < 512) minors.push_back(d);
    span.add(A.ring()->poly_to_vec(d, r), 0);
    return !full();
  }

  void run() {
    const auto& src = A.src().gen_degrees;
    const auto& tgt = A.tgt().gen_degrees;
    if (r == 1) {
      for (int j = 0; j < A.cols() && !full(); ++j)
        for (const auto& [i, p] : A.column(j)) {
          if (src[j] - tgt[i] != 1) continue;
          if (!feed({i}, {j})) return;
        }
      return;
    }
    if (r == 2) {
      // pairs of disjoint linear entries; every nonzero degree-2 minor of a
      // matrix with entries in m has such a pair on a diagonal
      struct Lin {
        int i, j;
      };
      std::vector<Lin> lin;
      for (int j = 0; j < A.cols(); ++j)
        for (const auto& [i, p] : A.column(j))
          if (src[j] - tgt[i] == 1) lin.push_back({i, j});
      for (size_t a = 0; a < lin.size() && !full(); ++a)
        for (size_t b = a + 1; b < lin.size(); ++b) {
          if (lin[a].i == lin[b].i || lin[a].j == lin[b].j) continue;
          int r0 = std::min(lin[a].i, lin[b].i), r1 = std::max(lin[a].i, lin[b].i);
          int c0 = std::min(lin[a].j, lin[b].j), c1 = std::max(lin[a].j, lin[b].j);
          if (src[c0] + src[c1] - tgt[r0] - tgt[r1] != 2) continue;
          if (!feed({r0, r1}, {c0, c1})) return;
        }
      return;
    }
    // general r: subset enumeration filtered by the degree condition
    for_each_subset(A.cols(), r, [&](const std::vector<int>& cols) {
      int cd = 0;
      for (int j : cols) cd += src[j];
      bool keep_going = true;
      for_each_subset(A.rows(), r, [&](const std::vector<int>& rows) {
        int rd = 0;
        for (int i : rows) rd += tgt[i];
        if (cd - rd != r) return true;
        keep_going = feed(rows, cols);
        return keep_going;
      });
      return keep_going && !full();
    });
  }
};

} // namespace

std::string MinorVerdict::rel_string() const {
  switch (rel) {
    case MinorRel::Equal: return "equal";
    case MinorRel::Proper: return "proper";
    case MinorRel::Zero: return "zero";
  }
  return "?";
}

std::string MinorVerdict::to_line(const RingPtr& ring) const {
  std::string mr = r == 1 ? "m" : "m^" + std::to_string(r);
  std::string s = "I(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ") ";
  if (rel == MinorRel::Equal) {
    s += "= " + mr;
  } else {
    s += "= " + ideal(ring).to_string() + (ideal_exact ? "" : " (partial)") + " != " + mr;
  }
  s += certified ? " [certified]" : " [up to computed degree]";
  return s;
}

MinorVerdict minors_vs_mr(const GradedMatrix& A, int n, int r, bool genuine_gens,
                          bool full_matrix) {
  MinorVerdict v;
  v.n = n;
  v.r = r;
  RingPtr ring = A.ring();
  const auto& f = ring->field();
  if (r == 0) {
    v.rel = MinorRel::Equal;
    v.ideal_gens = {poly_constant(f, f.one())};
    v.ideal_exact = true;
    v.certified = true;
    return v;
  }
  int hr = ring->hilbert(r);
  bool mr_zero = hr == 0;
  if (r > A.rows() || r > A.cols()) {
    v.rel = mr_zero ? MinorRel::Equal : MinorRel::Zero;
    v.ideal_exact = true;
    v.certified = full_matrix;
    if (!mr_zero) v.witness = ring->vec_to_poly(SparseVec{{{0, 1}}}, r);
    return v;
  }

  SpanFill fill(A, r, 40000000L);
  fill.run();
  if (!fill.exhausted && !fill.full())
    fail(Err::CapTooLow, "degree-" + std::to_string(r) + " minor span enumeration exceeded budget");

  if (!mr_zero && fill.full()) {
    v.rel = MinorRel::Equal;
    v.ideal_gens.clear();
    for (const auto& m : ring->std_monomials(r))
      v.ideal_gens.push_back(poly_monomial(f, m, f.one()));
    v.ideal_exact = true; // the ideal IS m^r
    v.certified = genuine_gens;
    return v;
  }

  // not equal to m^r (or m^r = 0): report the honest ideal when enumerable
  long count = minor_enumeration_count(A, r);
  if (count <= 200000) {
    GradedIdeal I = minors_ideal(A, r);
    v.ideal_exact = true;
    v.ideal_gens = I.generators();
    if (I.is_zero()) {
      v.rel = mr_zero ? MinorRel::Equal : MinorRel::Zero;
    } else {
      v.rel = mr_zero ? MinorRel::Equal : MinorRel::Proper;
    }
    if (!mr_zero) {
      // witness: a degree-r standard monomial outside the ideal
      for (const auto& m : ring->std_monomials(r)) {
        FpPoly p = poly_monomial(f, m, f.one());
        if (!I.contains(p)) {
          v.witness = p;
          break;
        }
      }
    }
  } else {
    v.ideal_exact = false;
    v.ideal_gens = fill.minors;
    v.rel = mr_zero ? MinorRel::Equal : MinorRel::Proper;
    if (!mr_zero) {
      GradedIdeal partial(ring, fill.minors);
      for (const auto& m : ring->std_monomials(r)) {
        FpPoly p = poly_monomial(f, m, f.one());
        if (!partial.contains(p)) {
          v.witness = p;
          break;
        }
      }
    }
  }
  v.certified = full_matrix && v.ideal_exact;
  return v;
}

MinorVerdict minors_of_resolution(const Resolution& res, int n, int r) {
  return minors_vs_mr(res.diff(n), n, r,
                      res.gens_genuine(n) && res.gens_genuine(n - 1),
                      res.full_matrix_certified(n));
}

bool check_minors_in_mr(const GradedMatrix& A, int r, long budget) {
  if (!A.entries_in_m()) fail(Err::NotMinimal, "matrix has unit entries");
  RingPtr ring = A.ring();
  GradedIdeal mr = max_ideal_power(ring, r);
  if (r == 0) return true;
  if (r > A.rows() || r > A.cols()) return true; // zero ideal
  if (minor_enumeration_count(A, r) > budget)
    fail(Err::Internal, "minor enumeration exceeds budget");
  bool ok = true;
  for_each_subset(A.rows(), r, [&](const std::vector<int>& rows) {
    for_each_subset(A.cols(), r, [&](const std::vector<int>& cols) {
      FpPoly d = minor_det(A, rows, cols);
      if (d.is_zero()) return true;
      if (d.degree() < r || !mr.contains(d)) {
        ok = false;
        fail(Err::Internal, "minor of degree " + std::to_string(d.degree()) +
                                " escapes m^" + std::to_string(r));
      }
      return true;
    });
    return ok;
  });
  return ok;
}

GradedMatrix kron_with_identity(const GradedMatrix& A, int ell) {
  GradedFreeModule src{A.ring(), {}}, tgt{A.ring(), {}};
  for (int j = 0; j < A.cols(); ++j)
    for (int c = 0; c < ell; ++c) src.gen_degrees.push_back(A.src().gen_degrees[j]);
  for (int i = 0; i < A.rows(); ++i)
    for (int c = 0; c < ell; ++c) tgt.gen_degrees.push_back(A.tgt().gen_degrees[i]);
  GradedMatrix out(src, tgt);
  for (int j = 0; j < A.cols(); ++j)
    for (const auto& [i, p] : A.column(j))
      for (int c = 0; c < ell; ++c) out.set_entry(i * ell + c, j * ell + c, p);
  return out;
}

bool check_tensor_submatrix_law(const GradedMatrix& A, int ell, const GradedMatrix& B,
                                const std::vector<int>& composition,
                                const std::vector<int>& row_idx,
                                const std::vector<int>& col_idx) {
  GradedMatrix K = kron_with_identity(A, ell);
  if (static_cast<int>(row_idx.size()) != K.rows() ||
      static_cast<int>(col_idx.size()) != K.cols())
    fail(Err::BadEmbedding, "index sets do not match A (x) Id dimensions");
  for (int u = 0; u < K.rows(); ++u)
    for (int v = 0; v < K.cols(); ++v)
      if (!(B.entry(row_idx[u], col_idx[v]) == K.entry(u, v)))
        fail(Err::BadEmbedding, "B does not contain A (x) Id at the given indices");
  int r = 0;
  for (int ri : composition) r += ri;
  if (static_cast<int>(composition.size()) != ell)
    fail(Err::BadEmbedding, "composition length must be the tensor multiplicity");
  GradedIdeal prod = GradedIdeal::unit(A.ring());
  for (int ri : composition) prod = ideal_product(prod, minors_ideal(A, ri));
  GradedIdeal big = minors_ideal(B, r);
  for (const auto& g : prod.generators())
    if (!big.contains(g)) return false;
  return true;
}

bool check_summand_inclusion(const Resolution& resM, const Resolution& resN, int n, int m,
                             int r) {
  GradedIdeal small = minors_ideal(resN.diff(m), r);
  GradedIdeal big = minors_ideal(resM.diff(n + m), r);
  for (const auto& g : small.generators())
    if (!big.contains(g)) return false;
  return true;
}

} // namespace fitres
