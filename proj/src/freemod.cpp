#include "fitres/freemod.hpp"

namespace fitres {

SliceLayout slice_layout(const GradedFreeModule& F, int d) {
  SliceLayout L;
  L.offset.resize(F.rank());
  L.mono_count.resize(F.rank());
  for (int j = 0; j < F.rank(); ++j) {
    L.offset[j] = L.dim;
    L.mono_count[j] = F.ring->hilbert(d - F.gen_degrees[j]);
    L.dim += L.mono_count[j];
  }
  return L;
}

GradedMatrix::GradedMatrix(GradedFreeModule src, GradedFreeModule tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
  cols_.resize(src_.rank());
}

void GradedMatrix::set_entry(int i, int j, FpPoly p) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols()) fail(Err::Internal, "entry out of range");
  FpPoly n = ring()->nf(std::move(p));
  if (!n.is_zero()) {
    if (!n.is_homogeneous()) fail(Err::NonHomogeneous, "matrix entry is not homogeneous");
    int want = src_.gen_degrees[j] - tgt_.gen_degrees[i];
    if (n.degree() != want)
      fail(Err::NonHomogeneous, "matrix entry degree " + std::to_string(n.degree()) +
                                    " does not match grading (expected " +
                                    std::to_string(want) + ")");
  }
  auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& a, int b) { return a.first < b; });
  if (it != col.end() && it->first == i) {
    if (n.is_zero()) col.erase(it);
    else it->second = std::move(n);
  } else if (!n.is_zero()) {
    col.insert(it, {i, std::move(n)});
  }
}

const FpPoly& GradedMatrix::entry(int i, int j) const {
  const auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& a, int b) { return a.first < b; });
  if (it != col.end() && it->first == i) return it->second;
  return zero_;
}

bool GradedMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool GradedMatrix::entries_in_m() const {
  for (const auto& c : cols_)
    for (const auto& [i, p] : c)
      if (p.degree() == 0) return false;
  return true;
}

int GradedMatrix::entry_count() const {
  int n = 0;
  for (const auto& c : cols_) n += static_cast<int>(c.size());
  return n;
}

std::vector<SparseVec> GradedMatrix::degree_slice(int d, const SliceLayout& dom,
                                                  const SliceLayout& cod) const {
  const auto& R = *ring();
  const auto& f = R.field();
  std::vector<SparseVec> out;
  out.reserve(dom.dim);
  std::vector<uint32_t> dense(cod.dim, 0);
  std::vector<int> touched;
  for (int j = 0; j < cols(); ++j) {
    int dj = d - src_.gen_degrees[j];
    if (dj < 0 || dom.mono_count[j] == 0) continue;
    const auto& mons = R.std_monomials(dj);
    for (int u = 0; u < dom.mono_count[j]; ++u) {
      for (int r : touched) dense[r] = 0;
      touched.clear();
      const Monomial& um = mons[u];
      for (const auto& [i, p] : cols_[j]) {
        int off = cod.offset[i];
        for (const auto& [m, c] : p.terms) {
          const SparseVec& prod = R.nf_monomial(m * um);
          for (const auto& [k, pc] : prod.e) {
            int idx = off + k;
            if (dense[idx] == 0) touched.push_back(idx);
            dense[idx] = f.add(dense[idx], f.mul(c, pc));
          }
        }
      }
      SparseVec col;
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int r : touched)
        if (dense[r]) col.push(r, dense[r]);
      out.push_back(std::move(col));
    }
  }
  if (static_cast<int>(out.size()) != dom.dim) fail(Err::Internal, "slice layout mismatch");
  return out;
}

void GradedMatrix::swap_columns(int a, int b) {
  if (src_.gen_degrees[a] != src_.gen_degrees[b])
    fail(Err::NonHomogeneous, "swapping columns of different degrees");
  std::swap(cols_[a], cols_[b]);
}

void GradedMatrix::add_column_multiple(int dst, int src, const FpPoly& c) {
  if (c.is_zero()) return;
  const auto& R = *ring();
  for (const auto& [i, p] : cols_[src]) {
    FpPoly add = R.nf_mul(p, c);
    FpPoly cur = entry(i, dst);
    set_entry(i, dst, poly_add(R.field(), cur, add));
  }
}

GradedMatrix GradedMatrix::transpose_with(GradedFreeModule new_src,
                                          GradedFreeModule new_tgt) const {
  if (new_src.rank() != rows() || new_tgt.rank() != cols())
    fail(Err::Internal, "transpose rank mismatch");
  GradedMatrix t(std::move(new_src), std::move(new_tgt));
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, p] : cols_[j]) t.set_entry(j, i, p);
  return t;
}

std::string GradedMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    s += i == 0 ? "[" : " ";
    s += "[";
    for (int j = 0; j < cols(); ++j) {
      if (j) s += ", ";
      s += ring()->to_string(entry(i, j));
    }
    s += "]";
    if (i + 1 < rows()) s += "\n";
  }
  s += "]";
  if (rows() == 0) s = "[]";
  return s;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) fail(Err::Internal, "composition rank mismatch");
  const auto& R = *a.ring();
  GradedMatrix out(b.src(), a.tgt());
  for (int c = 0; c < b.cols(); ++c) {
    std::map<int, FpPoly> acc;
    for (const auto& [r, q] : b.column(c)) {
      for (const auto& [i, p] : a.column(r)) {
        FpPoly prod = R.nf_mul(p, q);
        if (prod.is_zero()) continue;
        auto it = acc.find(i);
        if (it == acc.end()) acc.emplace(i, std::move(prod));
        else it->second = poly_add(R.field(), it->second, prod);
      }
    }
    for (auto& [i, p] : acc) {
      if (!p.is_zero()) out.set_entry(i, c, std::move(p));
    }
  }
  return out;
}

GradedMatrix minimalize(const GradedMatrix& a) {
  const auto& R = *a.ring();
  const auto& f = R.field();
  // dense working copy; unit pruning happens on small presentation matrices
  int nr = a.rows(), nc = a.cols();
  std::vector<std::vector<FpPoly>> w(nr, std::vector<FpPoly>(nc));
  for (int j = 0; j < nc; ++j)
    for (const auto& [i, p] : a.column(j)) w[i][j] = p;
  std::vector<int> rdeg = a.tgt().gen_degrees, cdeg = a.src().gen_degrees;
  std::vector<bool> rkeep(nr, true), ckeep(nc, true);

  while (true) {
    int pi = -1, pj = -1;
    for (int i = 0; pi < 0 && i < nr; ++i) {
      if (!rkeep[i]) continue;
      for (int j = 0; j < nc; ++j) {
        if (!ckeep[j]) continue;
        if (!w[i][j].is_zero() && w[i][j].degree() == 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    uint32_t inv = f.inv(w[pi][pj].lead_coeff());
    // clear the pivot row across other columns, then the pivot column
    for (int j = 0; j < nc; ++j) {
      if (j == pj || !ckeep[j] || w[pi][j].is_zero()) continue;
      FpPoly factor = poly_scale(f, w[pi][j], inv);
      for (int i = 0; i < nr; ++i) {
        if (!rkeep[i] || w[i][pj].is_zero()) continue;
        w[i][j] = R.nf(poly_sub(f, w[i][j], poly_mul(f, w[i][pj], factor)));
      }
    }
    for (int i = 0; i < nr; ++i) {
      if (i == pi || !rkeep[i] || w[i][pj].is_zero()) continue;
      // row ops change the target basis; cokernel is preserved
      FpPoly factor = poly_scale(f, w[i][pj], inv);
      for (int j = 0; j < nc; ++j) {
        if (!ckeep[j] || w[pi][j].is_zero()) continue;
        w[i][j] = R.nf(poly_sub(f, w[i][j], poly_mul(f, factor, w[pi][j])));
      }
    }
    rkeep[pi] = false;
    ckeep[pj] = false;
  }

  GradedFreeModule src{a.ring(), {}}, tgt{a.ring(), {}};
  std::vector<int> rmap(nr, -1), cmap(nc, -1);
  for (int i = 0; i < nr; ++i)
    if (rkeep[i]) {
      rmap[i] = tgt.rank();
      tgt.gen_degrees.push_back(rdeg[i]);
    }
  for (int j = 0; j < nc; ++j)
    if (ckeep[j]) {
      cmap[j] = src.rank();
      src.gen_degrees.push_back(cdeg[j]);
    }
  GradedMatrix out(std::move(src), std::move(tgt));
  for (int j = 0; j < nc; ++j) {
    if (!ckeep[j]) continue;
    for (int i = 0; i < nr; ++i)
      if (rkeep[i] && !w[i][j].is_zero()) out.set_entry(rmap[i], cmap[j], w[i][j]);
  }
  return out;
}

int ModulePresentation::hilbert(int d) const {
  const auto& F0 = presentation.tgt();
  SliceLayout dom = slice_layout(presentation.src(), d);
  SliceLayout cod = slice_layout(F0, d);
  auto cols = presentation.degree_slice(d, dom, cod);
  return cod.dim - rank_of(ring->field(), cod.dim, cols);
}

ModulePresentation residue_field_presentation(RingPtr ring) {
  GradedFreeModule F0{ring, {0}};
  GradedFreeModule F1{ring, std::vector<int>(ring->nvars(), 1)};
  GradedMatrix A(F1, F0);
  for (int v = 0; v < ring->nvars(); ++v) A.set_entry(0, v, ring->var_poly(v));
  return ModulePresentation{ring, std::move(A)};
}

ModulePresentation cyclic_presentation(RingPtr ring, const std::vector<FpPoly>& ideal_gens) {
  GradedFreeModule F0{ring, {0}};
  std::vector<FpPoly> gens;
  std::vector<int> degs;
  for (const auto& g : ideal_gens) {
    FpPoly n = ring->nf(g);
    if (n.is_zero()) continue;
    if (!n.is_homogeneous()) fail(Err::NonHomogeneous, "cyclic module relation not homogeneous");
    degs.push_back(n.degree());
    gens.push_back(std::move(n));
  }
  GradedFreeModule F1{ring, degs};
  GradedMatrix A(F1, F0);
  for (size_t j = 0; j < gens.size(); ++j) A.set_entry(0, static_cast<int>(j), gens[j]);
  return ModulePresentation{ring, std::move(A)};
}

ModulePresentation coker_presentation(GradedMatrix A) {
  RingPtr ring = A.ring();
  return ModulePresentation{ring, std::move(A)};
}

} // namespace fitres
