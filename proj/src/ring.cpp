#include "fitres/ring.hpp"

#include <set>

namespace fitres {

RingPresentation::RingPresentation(FpField field, std::vector<std::string> var_names,
                                   std::vector<FpPoly> relations)
    : field_(field), var_names_(std::move(var_names)), relations_(std::move(relations)) {
  if (var_names_.empty() || var_names_.size() > Monomial::kMaxVars)
    fail(Err::ArityMismatch, "variable count must be between 1 and 8");
  std::set<std::string> seen;
  for (const auto& n : var_names_) {
    if (n.empty()) fail(Err::ParseError, "empty variable name");
    if (!seen.insert(n).second) fail(Err::NameClash, "duplicate variable name " + n);
  }
  for (const auto& r : relations_) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) fail(Err::NonHomogeneous, "relation is not homogeneous");
    if (r.degree() < 2) fail(Err::NonHomogeneous, "relations must have degree >= 2");
    for (const auto& t : r.terms)
      for (int i = nvars(); i < Monomial::kMaxVars; ++i)
        if (t.first.exp(i) != 0) fail(Err::ArityMismatch, "relation uses undeclared variable");
  }
  gb_ = reduced_groebner(field_, relations_);
  for (const auto& g : gb_) gb_leads_.push_back(g.lead_monomial());

  // artinian iff each variable has a pure power among the GB lead terms
  artinian_ = true;
  for (int i = 0; i < nvars(); ++i) {
    bool pure = false;
    for (const auto& lm : gb_leads_) {
      bool only_i = lm.exp(i) > 0;
      for (int j = 0; only_i && j < Monomial::kMaxVars; ++j)
        if (j != i && lm.exp(j) != 0) only_i = false;
      if (only_i) {
        pure = true;
        break;
      }
    }
    if (!pure) {
      artinian_ = false;
      break;
    }
  }
}

bool RingPresentation::divisible_by_lead(const Monomial& m) const {
  for (const auto& lm : gb_leads_)
    if (lm.divides(m)) return true;
  return false;
}

const std::vector<Monomial>& RingPresentation::std_monomials(int d) const {
  if (d < 0) fail(Err::Internal, "negative degree");
  if (static_cast<size_t>(d) >= std_cache_.size()) {
    std_cache_.resize(d + 1);
    std_index_cache_.resize(d + 1);
  }
  if (!std_cache_[d]) {
    auto list = std::make_unique<std::vector<Monomial>>();
    for (const auto& m : monomials_of_degree(nvars(), d))
      if (!divisible_by_lead(m)) list->push_back(m);
    auto& idx = std_index_cache_[d];
    for (size_t i = 0; i < list->size(); ++i) idx[(*list)[i].packed] = static_cast<int>(i);
    std_cache_[d] = std::move(list);
  }
  return *std_cache_[d];
}

int RingPresentation::std_index(const Monomial& m) const {
  int d = m.degree();
  std_monomials(d);
  auto& idx = std_index_cache_[d];
  auto it = idx.find(m.packed);
  return it == idx.end() ? -1 : it->second;
}

const SparseVec& RingPresentation::nf_monomial(const Monomial& m) const {
  auto it = nf_cache_.find(m.packed);
  if (it != nf_cache_.end()) return it->second;
  FpPoly p = nf(poly_monomial(field_, m, field_.one()));
  SparseVec v = poly_to_vec(p, m.degree());
  return nf_cache_.emplace(m.packed, std::move(v)).first->second;
}

SparseVec RingPresentation::poly_to_vec(const FpPoly& p, int d) const {
  SparseVec v;
  if (p.is_zero()) return v;
  for (const auto& [m, c] : p.terms) {
    if (m.degree() != d) fail(Err::NonHomogeneous, "polynomial not homogeneous of expected degree");
    int i = std_index(m);
    if (i < 0) fail(Err::Internal, "polynomial not in normal form");
    v.push(i, c);
  }
  std::sort(v.e.begin(), v.e.end());
  return v;
}

FpPoly RingPresentation::vec_to_poly(const SparseVec& v, int d) const {
  const auto& basis = std_monomials(d);
  std::vector<FpPoly::Term> ts;
  for (const auto& [i, c] : v.e) ts.push_back({basis[i], c});
  return poly_from_terms(field_, std::move(ts));
}

int RingPresentation::artinian_top() const {
  if (!artinian_) fail(Err::NotArtinian, "ring is not artinian");
  if (artinian_top_ < 0) {
    // bounded by sum of (pure power degrees - 1)
    int bound = 0;
    for (int i = 0; i < nvars(); ++i) {
      int best = Monomial::kMaxExp;
      for (const auto& lm : gb_leads_) {
        bool only_i = lm.exp(i) > 0;
        for (int j = 0; only_i && j < Monomial::kMaxVars; ++j)
          if (j != i && lm.exp(j) != 0) only_i = false;
        if (only_i) best = std::min(best, lm.exp(i));
      }
      bound += best - 1;
    }
    int h = 0;
    for (int d = 1; d <= bound; ++d)
      if (hilbert(d) > 0) h = d;
    artinian_top_ = h;
  }
  return artinian_top_;
}

int RingPresentation::length() const {
  if (length_ < 0) {
    int h = artinian_top();
    int l = 0;
    for (int d = 0; d <= h; ++d) l += hilbert(d);
    length_ = l;
  }
  return length_;
}

std::string RingPresentation::describe() const {
  std::string s = "k[";
  for (size_t i = 0; i < var_names_.size(); ++i) {
    if (i) s += ",";
    s += var_names_[i];
  }
  s += "]";
  if (!relations_.empty()) {
    s += "/(";
    for (size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += to_string(relations_[i]);
    }
    s += ")";
  }
  return s;
}

RingPtr make_ring(uint32_t p, std::vector<std::string> var_names,
                  const std::vector<std::string>& relation_texts) {
  FpField f(p);
  std::vector<FpPoly> rels;
  for (const auto& t : relation_texts) rels.push_back(parse_fp_poly(f, t, var_names));
  return std::make_shared<const RingPresentation>(f, std::move(var_names), std::move(rels));
}

int hilbert_by_rank(const RingPresentation& ring, int d) {
  const auto& f = ring.field();
  auto all = monomials_of_degree(ring.nvars(), d);
  std::unordered_map<uint64_t, int> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i].packed] = static_cast<int>(i);
  std::vector<SparseVec> cols;
  for (const auto& g : ring.relations()) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& u : monomials_of_degree(ring.nvars(), d - dg)) {
      SparseVec col;
      for (const auto& [m, c] : g.terms) col.push(index.at((m * u).packed), c);
      std::sort(col.e.begin(), col.e.end());
      cols.push_back(std::move(col));
    }
  }
  return static_cast<int>(all.size()) - rank_of(f, static_cast<int>(all.size()), cols);
}

} // namespace fitres
