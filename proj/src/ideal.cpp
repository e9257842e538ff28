#include "fitres/ideal.hpp"

namespace fitres {

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<FpPoly> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) {
    FpPoly n = ring_->nf(g);
    if (n.is_zero()) continue;
    if (!n.is_homogeneous()) fail(Err::NonHomogeneous, "ideal generator is not homogeneous");
    gens_.push_back(std::move(n));
  }
}

GradedIdeal GradedIdeal::unit(RingPtr ring) {
  const auto& f = ring->field();
  return GradedIdeal(std::move(ring), {poly_constant(f, f.one())});
}

bool GradedIdeal::contains_unit() const {
  for (const auto& g : gens_)
    if (g.degree() == 0) return true;
  return false;
}

int GradedIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Eliminator& GradedIdeal::span(int d) const {
  auto it = span_cache_.find(d);
  if (it == span_cache_.end()) {
    auto elim = std::make_unique<Eliminator>(ring_->field(), ring_->hilbert(d), false);
    for (const auto& g : gens_) {
      int dg = g.degree();
      if (dg > d) continue;
      SparseVec gv = ring_->poly_to_vec(g, dg);
      for (const auto& u : ring_->std_monomials(d - dg)) {
        // NF(u * g) assembled from cached monomial normal forms
        SparseVec col;
        std::vector<uint32_t> dense(ring_->hilbert(d), 0);
        const auto& f = ring_->field();
        const auto& basis_g = ring_->std_monomials(dg);
        for (const auto& [i, c] : gv.e) {
          const SparseVec& prod = ring_->nf_monomial(basis_g[i] * u);
          for (const auto& [j, pc] : prod.e) dense[j] = f.add(dense[j], f.mul(c, pc));
        }
        for (size_t j = 0; j < dense.size(); ++j)
          if (dense[j]) col.push(static_cast<int>(j), dense[j]);
        elim->add(col, 0);
      }
    }
    it = span_cache_.emplace(d, std::move(elim)).first;
  }
  return *it->second;
}

int GradedIdeal::dim_at(int d) const {
  if (d < 0) return 0;
  return span(d).rank();
}

bool GradedIdeal::contains(const FpPoly& f) const {
  FpPoly n = ring_->nf(f);
  if (n.is_zero()) return true;
  if (!n.is_homogeneous()) fail(Err::NonHomogeneous, "membership test needs homogeneous input");
  int d = n.degree();
  return span(d).reduce(ring_->poly_to_vec(n, d)).residual.is_zero();
}

const std::vector<FpPoly>& GradedIdeal::minimal_generators() const {
  if (!min_gens_) {
    std::vector<FpPoly> out;
    if (!gens_.empty()) {
      std::map<int, std::vector<const FpPoly*>> by_degree;
      for (const auto& g : gens_) by_degree[g.degree()].push_back(&g);
      for (auto& [d, list] : by_degree) {
        // span of m * I in degree d: multiples of strictly lower-degree part
        Eliminator elim(ring_->field(), ring_->hilbert(d), false);
        const auto& f = ring_->field();
        for (const auto& g : gens_) {
          int dg = g.degree();
          if (dg >= d) continue;
          SparseVec gv = ring_->poly_to_vec(g, dg);
          const auto& basis_g = ring_->std_monomials(dg);
          for (const auto& u : ring_->std_monomials(d - dg)) {
            std::vector<uint32_t> dense(ring_->hilbert(d), 0);
            for (const auto& [i, c] : gv.e) {
              const SparseVec& prod = ring_->nf_monomial(basis_g[i] * u);
              for (const auto& [j, pc] : prod.e) dense[j] = f.add(dense[j], f.mul(c, pc));
            }
            SparseVec col;
            for (size_t j = 0; j < dense.size(); ++j)
              if (dense[j]) col.push(static_cast<int>(j), dense[j]);
            elim.add(col, 0);
          }
        }
        for (const FpPoly* g : list)
          if (elim.add(ring_->poly_to_vec(*g, d), 0)) out.push_back(*g);
      }
    }
    min_gens_ = std::move(out);
  }
  return *min_gens_;
}

std::string GradedIdeal::to_string() const {
  if (gens_.empty()) return "0";
  if (contains_unit()) return "(1)";
  const auto& mg = minimal_generators();
  std::string s = "(";
  for (size_t i = 0; i < mg.size(); ++i) {
    if (i) s += ", ";
    s += ring_->to_string(mg[i]);
  }
  return s + ")";
}

GradedIdeal max_ideal_power(RingPtr ring, int r) {
  if (r < 0) fail(Err::Internal, "negative power");
  if (r == 0) return GradedIdeal::unit(std::move(ring));
  std::vector<FpPoly> gens;
  const auto& f = ring->field();
  for (const auto& m : ring->std_monomials(r))
    gens.push_back(poly_monomial(f, m, f.one()));
  return GradedIdeal(std::move(ring), std::move(gens));
}

GradedIdeal socle(RingPtr ring) {
  if (!ring->is_artinian()) fail(Err::NotArtinian, "socle requires an artinian ring");
  const auto& f = ring->field();
  int e = ring->nvars();
  int h = ring->artinian_top();
  std::vector<FpPoly> gens;
  for (int d = 0; d <= h; ++d) {
    int hd = ring->hilbert(d);
    int hd1 = ring->hilbert(d + 1);
    const auto& basis = ring->std_monomials(d);
    std::vector<SparseVec> cols(hd);
    for (int i = 0; i < hd; ++i) {
      // stacked multiplication by each variable
      for (int v = 0; v < e; ++v) {
        const SparseVec& prod = ring->nf_monomial(basis[i] * Monomial::var(v));
        for (const auto& [j, c] : prod.e) cols[i].push(v * hd1 + j, c);
      }
      std::sort(cols[i].e.begin(), cols[i].e.end());
    }
    auto ker = kernel_basis(f, e * hd1, cols);
    for (const auto& k : ker.vectors) gens.push_back(ring->vec_to_poly(k, d));
  }
  return GradedIdeal(std::move(ring), std::move(gens));
}

IdealCompareResult ideal_compare(const GradedIdeal& a, const GradedIdeal& b, int up_to) {
  if (up_to < a.max_generator_degree() || up_to < b.max_generator_degree())
    fail(Err::CapTooLow, "comparison cap below a generator degree");
  std::optional<FpPoly> a_missing; // generator of a outside b
  for (const auto& g : a.generators())
    if (!b.contains(g)) {
      a_missing = g;
      break;
    }
  std::optional<FpPoly> b_missing;
  for (const auto& g : b.generators())
    if (!a.contains(g)) {
      b_missing = g;
      break;
    }
  if (!a_missing && !b_missing) return {IdealRel::Equal, std::nullopt};
  if (!a_missing) return {IdealRel::AProperInB, b_missing};
  if (!b_missing) return {IdealRel::BProperInA, a_missing};
  return {IdealRel::Incomparable, a_missing};
}

GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b) {
  std::vector<FpPoly> gens;
  const auto& ring = a.ring();
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) {
      FpPoly p = ring->nf_mul(g, h);
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  return GradedIdeal(ring, std::move(gens));
}

} // namespace fitres
