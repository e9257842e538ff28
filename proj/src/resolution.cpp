#include "fitres/resolution.hpp"

#include <map>
#include <sstream>

namespace fitres {

namespace {

// flat slice index -> (generator, monomial) using a layout
std::pair<int, Monomial> unflatten(const GradedFreeModule& F, const SliceLayout& L, int d,
                                   int flat) {
  int j = 0;
  while (j + 1 < F.rank() && L.offset[j + 1] <= flat) ++j;
  const auto& mons = F.ring->std_monomials(d - F.gen_degrees[j]);
  return {j, mons[flat - L.offset[j]]};
}

// scatter a polynomial column over src gens into slice coordinates at degree d
SparseVec scatter_column(const GradedFreeModule& F, const SliceLayout& L, int d,
                         const std::vector<std::pair<int, FpPoly>>& column) {
  const auto& R = *F.ring;
  const auto& f = R.field();
  std::vector<uint32_t> dense(L.dim, 0);
  for (const auto& [j, p] : column) {
    int pd = d - F.gen_degrees[j];
    if (p.is_zero()) continue;
    if (p.degree() != pd) fail(Err::NonHomogeneous, "column entry degree mismatch");
    SparseVec pv = R.poly_to_vec(p, pd);
    for (const auto& [k, c] : pv.e) dense[L.offset[j] + k] = f.add(dense[L.offset[j] + k], c);
  }
  SparseVec out;
  for (int i = 0; i < L.dim; ++i)
    if (dense[i]) out.push(i, dense[i]);
  return out;
}

int column_degree(const GradedFreeModule& F, const std::vector<std::pair<int, FpPoly>>& column) {
  int d = -1;
  for (const auto& [j, p] : column) {
    if (p.is_zero()) continue;
    int cd = F.gen_degrees[j] + p.degree();
    if (d < 0) d = cd;
    else if (d != cd) fail(Err::NonHomogeneous, "column is not homogeneous");
  }
  if (d < 0) fail(Err::Internal, "zero forced column");
  return d;
}

// multiples u*g of an existing generator, scattered at degree d
void add_generator_multiples(Eliminator& span, const GradedFreeModule& F, const SliceLayout& L,
                             int d, const SyzygyGen& g) {
  const auto& R = *F.ring;
  const auto& f = R.field();
  if (g.degree >= d) return;
  std::vector<uint32_t> dense(L.dim, 0);
  std::vector<int> touched;
  for (const auto& u : R.std_monomials(d - g.degree)) {
    for (int t : touched) dense[t] = 0;
    touched.clear();
    for (const auto& [j, p] : g.column) {
      int off = L.offset[j];
      for (const auto& [m, c] : p.terms) {
        const SparseVec& prod = R.nf_monomial(m * u);
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
    for (int t : touched)
      if (dense[t]) col.push(t, dense[t]);
    span.add(col, 0);
  }
}

} // namespace

KernelGenResult kernelgens_impl(const GradedMatrix& A, int cap,
                                const std::vector<ForcedColumn>& forced) {
  const GradedFreeModule& src = A.src();
  const GradedFreeModule& tgt = A.tgt();
  const auto& R = *A.ring();
  const auto& f = R.field();

  std::map<int, std::vector<const ForcedColumn*>> forced_by_degree;
  for (const auto& fc : forced) forced_by_degree[column_degree(src, fc)].push_back(&fc);

  std::vector<SyzygyGen> gens;
  std::vector<int> forced_positions;

  for (int d = src.min_degree(); d <= cap; ++d) {
    SliceLayout dom = slice_layout(src, d);
    if (dom.dim == 0) {
      if (forced_by_degree.count(d)) fail(Err::TrackingLost, "forced column in empty degree");
      continue;
    }
    SliceLayout cod = slice_layout(tgt, d);
    auto slice = A.degree_slice(d, dom, cod);
    KernelBasis K = kernel_basis(f, cod.dim, slice);

    Eliminator span(f, dom.dim, false);
    for (const auto& g : gens) add_generator_multiples(span, src, dom, d, g);

    auto fit = forced_by_degree.find(d);
    if (fit != forced_by_degree.end()) {
      for (const ForcedColumn* fc : fit->second) {
        // exact membership in the kernel
        std::map<int, FpPoly> image;
        for (const auto& [j, p] : *fc) {
          for (const auto& [i, a] : A.column(j)) {
            FpPoly prod = R.nf_mul(a, p);
            if (prod.is_zero()) continue;
            auto it = image.find(i);
            if (it == image.end()) image.emplace(i, std::move(prod));
            else it->second = poly_add(f, it->second, prod);
          }
        }
        for (const auto& [i, p] : image)
          if (!p.is_zero())
            fail(Err::TrackingLost, "designated column is not a syzygy (row " +
                                        std::to_string(i) + ": " + R.to_string(p) + ")");
        SparseVec v = scatter_column(src, dom, d, *fc);
        auto red = span.reduce(v);
        if (red.residual.is_zero())
          fail(Err::TrackingLost, "designated column is not a fresh minimal generator");
        span.install(red, 0);
        forced_positions.push_back(static_cast<int>(gens.size()));
        gens.push_back(SyzygyGen{d, *fc});
      }
    }

    for (const auto& k : K.vectors) {
      auto red = span.reduce(k);
      if (red.residual.is_zero()) continue;
      span.install(red, 0);
      // canonical representative: monic residual
      uint32_t inv = f.inv(red.residual.e.front().second);
      std::map<int, std::vector<FpPoly::Term>> by_gen;
      for (const auto& [flat, c] : red.residual.e) {
        auto [j, mono] = unflatten(src, dom, d, flat);
        by_gen[j].push_back({mono, f.mul(c, inv)});
      }
      SyzygyGen g;
      g.degree = d;
      for (auto& [j, ts] : by_gen) {
        FpPoly p = poly_from_terms(f, std::move(ts));
        if (!p.is_zero()) g.column.push_back({j, std::move(p)});
      }
      gens.push_back(std::move(g));
    }
  }

  GradedFreeModule next{A.ring(), {}};
  for (const auto& g : gens) next.gen_degrees.push_back(g.degree);
  GradedMatrix B(next, src);
  for (size_t c = 0; c < gens.size(); ++c)
    for (const auto& [j, p] : gens[c].column) B.set_entry(j, static_cast<int>(c), p);
  return KernelGenResult{std::move(B), cap, std::move(forced_positions)};
}

KernelGenResult kernel_generators(const GradedMatrix& A, int cap,
                                  const std::vector<ForcedColumn>& forced) {
  return kernelgens_impl(A, cap, forced);
}

GradedMatrix syzygy_step(const GradedMatrix& A, int cap) {
  if (!A.entries_in_m()) fail(Err::NotMinimal, "syzygy step requires entries in m");
  if (cap < A.src().max_degree())
    fail(Err::CapTooLow, "cap " + std::to_string(cap) + " below max source degree " +
                             std::to_string(A.src().max_degree()));
  return kernelgens_impl(A, cap, {}).matrix;
}

GradedMatrix minimal_generators_of_image(const GradedMatrix& A) {
  const GradedFreeModule& tgt = A.tgt();
  const auto& R = *A.ring();
  const auto& f = R.field();
  std::map<int, std::vector<int>> cols_by_degree;
  for (int j = 0; j < A.cols(); ++j) {
    if (A.column(j).empty()) continue; // zero column generates nothing
    cols_by_degree[A.src().gen_degrees[j]].push_back(j);
  }
  std::vector<int> keep;
  for (const auto& [d, cols] : cols_by_degree) {
    SliceLayout L = slice_layout(tgt, d);
    Eliminator span(f, L.dim, false);
    // m * (image): positive-degree multiples of every column
    for (int j = 0; j < A.cols(); ++j) {
      int cd = A.src().gen_degrees[j];
      if (cd >= d || A.column(j).empty()) continue;
      SyzygyGen g{cd, A.column(j)};
      add_generator_multiples(span, tgt, L, d, g);
    }
    for (int j : cols) {
      SparseVec v = scatter_column(tgt, L, d, A.column(j));
      if (span.add(v, 0)) keep.push_back(j);
    }
  }
  GradedFreeModule src{A.ring(), {}};
  for (int j : keep) src.gen_degrees.push_back(A.src().gen_degrees[j]);
  GradedMatrix out(src, tgt);
  for (size_t c = 0; c < keep.size(); ++c)
    for (const auto& [i, p] : A.column(keep[c])) out.set_entry(i, static_cast<int>(c), p);
  return out;
}

Resolution Resolution::of_module(const ModulePresentation& M, int n_max, int slack) {
  Resolution r;
  r.slack_ = slack;
  GradedMatrix a = minimalize(M.presentation);
  r.F0_ = a.tgt();
  GradedMatrix d1 = minimal_generators_of_image(a);
  r.module_ = ModulePresentation{M.ring, d1, M.degree_shift};
  r.diffs_.push_back(std::move(d1));
  r.info_.push_back(StepInfo{kUnbounded, true, kUnbounded});
  if (r.diffs_.back().src().rank() == 0) r.finite_ = true;
  r.extend(n_max);
  return r;
}

Resolution Resolution::of_image(const GradedMatrix& C, int n_max, int slack) {
  Resolution r;
  r.slack_ = slack;
  GradedMatrix gens = minimal_generators_of_image(C);
  r.F0_ = gens.src();
  r.image_gens_ = std::make_unique<GradedMatrix>(std::move(gens));
  r.extend(n_max);
  return r;
}

const GradedMatrix& Resolution::last_matrix() const {
  if (!diffs_.empty()) return diffs_.back();
  if (image_gens_) return *image_gens_;
  fail(Err::Internal, "resolution has no matrices");
}

void Resolution::extend(int n_max) {
  while (length() < n_max && !finite_) step();
}

void Resolution::step_impl(const std::vector<ForcedColumn>& forced,
                           std::vector<int>* forced_positions) {
  const GradedMatrix& L = last_matrix();
  const GradedFreeModule& Fn = L.src();
  if (Fn.rank() == 0) {
    if (!forced.empty()) fail(Err::TrackingLost, "tracked resolution ended early");
    finite_ = true;
    return;
  }
  const auto& R = *L.ring();
  bool artinian = R.is_artinian();
  int cap = Fn.max_degree() + (artinian ? R.artinian_top() : slack_);
  auto res = kernelgens_impl(L, cap, forced);

  int prev_tt = info_.empty() ? kUnbounded : info_.back().true_through;
  bool complete = artinian && prev_tt == kUnbounded;
  int tt = complete ? kUnbounded : (prev_tt == kUnbounded ? cap : std::min(cap, prev_tt + 1));

  // exactness of produced steps is structural; the composition check guards it
  GradedMatrix comp = compose(L, res.matrix);
  if (!comp.is_zero()) fail(Err::Internal, "differential composition is nonzero");

  if (forced_positions) *forced_positions = res.forced_positions;
  diffs_.push_back(std::move(res.matrix));
  info_.push_back(StepInfo{cap, complete, tt});
  if (diffs_.back().src().rank() == 0) finite_ = true;
  if (diffs_.size() == 1 && image_gens_)
    module_ = ModulePresentation{diffs_[0].ring(), diffs_[0], 0};
}

void Resolution::step() { step_impl({}, nullptr); }

void Resolution::extend_with_forced(const std::vector<ForcedColumn>& forced,
                                    std::vector<int>* forced_positions) {
  step_impl(forced, forced_positions);
}

const GradedFreeModule& Resolution::free_module(int n) const {
  if (n == 0) return F0_;
  if (n < 1 || n > length()) fail(Err::Internal, "free module index out of range");
  return diffs_[n - 1].src();
}

const GradedMatrix& Resolution::diff(int n) const {
  if (n < 1 || n > length()) fail(Err::Internal, "differential index out of range");
  return diffs_[n - 1];
}

int Resolution::betti(int n) const {
  if (n < 0) return 0;
  if (n == 0) return F0_.rank();
  if (n > length()) {
    if (finite_) return 0;
    fail(Err::Internal, "betti number beyond computed range");
  }
  return diffs_[n - 1].src().rank();
}

const StepInfo& Resolution::step_info(int n) const {
  if (n < 1 || n > length()) fail(Err::Internal, "step index out of range");
  return info_[n - 1];
}

bool Resolution::gens_genuine(int n) const {
  if (n == 0) return true;
  const StepInfo& si = step_info(n);
  if (si.true_through == kUnbounded) return true;
  return free_module(n).max_degree() <= si.true_through;
}

bool Resolution::full_matrix_certified(int n) const {
  if (n < 1 || n > length()) return false;
  bool cols_ok = step_info(n).complete;
  bool rows_ok = n == 1 ? true : step_info(n - 1).complete;
  return cols_ok && rows_ok;
}

std::string Resolution::betti_table() const {
  // rows: homological degree n; columns: internal degree
  int max_d = 0;
  for (int n = 0; n <= length(); ++n) max_d = std::max(max_d, free_module(n).max_degree());
  std::ostringstream os;
  os << "n\\d";
  for (int d = 0; d <= max_d; ++d) os << "\t" << d;
  os << "\ttotal\n";
  for (int n = 0; n <= length(); ++n) {
    std::map<int, int> counts;
    for (int g : free_module(n).gen_degrees) counts[g]++;
    os << n;
    for (int d = 0; d <= max_d; ++d) os << "\t" << (counts.count(d) ? counts[d] : 0);
    os << "\t" << betti(n);
    if (n >= 1 && !step_info(n).complete) os << "\t(through deg " << step_info(n).cap << ")";
    os << "\n";
  }
  return os.str();
}

ExactnessReport verify_exactness(const std::vector<const GradedMatrix*>& diffs, int cap) {
  ExactnessReport rep;
  if (diffs.empty()) return rep;
  const auto& f = diffs[0]->ring()->field();
  for (size_t k = 0; k + 1 < diffs.size(); ++k) {
    GradedMatrix comp = compose(*diffs[k], *diffs[k + 1]);
    if (!comp.is_zero()) {
      rep.is_complex = false;
      for (int j = 0; j < comp.cols() && rep.complex_failure.empty(); ++j)
        for (const auto& [i, p] : comp.column(j)) {
          rep.complex_failure = "position " + std::to_string(k + 1) + " entry (" +
                                std::to_string(i) + "," + std::to_string(j) + ") = " +
                                comp.ring()->to_string(p);
          break;
        }
      return rep;
    }
  }
  for (size_t k = 0; k + 1 < diffs.size(); ++k) {
    const GradedMatrix& Dk = *diffs[k];
    const GradedMatrix& Dk1 = *diffs[k + 1];
    for (int d = 0; d <= cap; ++d) {
      SliceLayout dom_k = slice_layout(Dk.src(), d);
      SliceLayout cod_k = slice_layout(Dk.tgt(), d);
      auto slice_k = Dk.degree_slice(d, dom_k, cod_k);
      int rank_k = rank_of(f, cod_k.dim, slice_k);
      int dim_ker = dom_k.dim - rank_k;
      SliceLayout dom_k1 = slice_layout(Dk1.src(), d);
      auto slice_k1 = Dk1.degree_slice(d, dom_k1, dom_k);
      int rank_k1 = rank_of(f, dom_k.dim, slice_k1);
      int hdim = dim_ker - rank_k1;
      if (hdim != 0)
        rep.homology.push_back(HomologyEntry{static_cast<int>(k + 1), d, hdim});
    }
  }
  return rep;
}

ModulePresentation dual_presentation(const ModulePresentation& M) {
  const auto& R = *M.ring;
  if (!R.is_artinian()) fail(Err::NotArtinian, "duals require an artinian ring");
  GradedMatrix A = minimalize(M.presentation);
  const GradedFreeModule& F0 = A.tgt();
  const GradedFreeModule& F1 = A.src();
  int shift = 0;
  for (int d : F0.gen_degrees) shift = std::max(shift, d);
  for (int d : F1.gen_degrees) shift = std::max(shift, d);
  GradedFreeModule F0d{M.ring, {}}, F1d{M.ring, {}};
  for (int d : F0.gen_degrees) F0d.gen_degrees.push_back(shift - d);
  for (int d : F1.gen_degrees) F1d.gen_degrees.push_back(shift - d);
  GradedMatrix At = A.transpose_with(F0d, F1d);
  int h = R.artinian_top();
  auto K = kernelgens_impl(At, F0d.max_degree() + h, {});
  // K.matrix columns generate ker(At) = Hom(M, R); one more step presents it
  auto pres = kernelgens_impl(K.matrix, K.matrix.src().max_degree() + h, {});
  return ModulePresentation{M.ring, pres.matrix, shift};
}

BettiGrowthReport betti_growth_check(const Resolution& res) {
  const auto& R = *res.module().ring;
  if (!R.is_artinian()) fail(Err::NotArtinian, "growth bound applies to artinian rings");
  BettiGrowthReport rep;
  int e = R.embdim();
  int l = R.length();
  int h = R.artinian_top();
  rep.factor = 2 * e - l + h - 1;
  rep.mu = res.mu();
  for (int n = rep.mu; n < res.length(); ++n) {
    if (!res.step_info(n).complete || !res.step_info(n + 1).complete) {
      rep.lines.push_back("n=" + std::to_string(n) + ": skipped (uncertified step)");
      continue;
    }
    long lhs = res.betti(n + 1);
    long rhs = static_cast<long>(rep.factor) * res.betti(n);
    bool ok = lhs >= rhs;
    rep.all_hold = rep.all_hold && ok;
    rep.lines.push_back("n=" + std::to_string(n) + ": beta_" + std::to_string(n + 1) + " = " +
                        std::to_string(lhs) + " >= " + std::to_string(rep.factor) + " * " +
                        std::to_string(res.betti(n)) + (ok ? "  [ok]" : "  [VIOLATED]"));
  }
  return rep;
}

bool euler_characteristic_holds(const Resolution& res, int d) {
  // valid when no uncomputed free module can contribute in degree d
  if (!res.finite() && res.free_module(res.length()).min_degree() <= d) return true;
  long sum = 0;
  int sign = 1;
  for (int n = 0; n <= res.length(); ++n) {
    sum += sign * res.free_module(n).dim_at(d);
    sign = -sign;
  }
  return sum == res.module().hilbert(d);
}

} // namespace fitres
