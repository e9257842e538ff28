#ifndef FITRES_RING_HPP
#define FITRES_RING_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fitres/groebner.hpp"
#include "fitres/linalg.hpp"
#include "fitres/parse.hpp"
#include "fitres/poly.hpp"

namespace fitres {

// A standard graded algebra R = k[x_1..x_e]/I presented by homogeneous
// relations of degree >= 2 (so embdim(R) = e), with a cached reduced Groebner
// basis under degrevlex on the declared variable sequence.
//
// Caches (standard monomial bases, monomial normal forms) fill lazily; the
// engine drives everything sequentially, so they are not synchronized.
class RingPresentation {
 public:
  RingPresentation(FpField field, std::vector<std::string> var_names,
                   std::vector<FpPoly> relations);

  const FpField& field() const { return field_; }
  int nvars() const { return static_cast<int>(var_names_.size()); }
  int embdim() const { return nvars(); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<FpPoly>& relations() const { return relations_; }
  const std::vector<FpPoly>& groebner_basis() const { return gb_; }

  bool is_polynomial_ring() const { return gb_.empty(); }
  bool is_artinian() const { return artinian_; }
  // least h with m^{h+1} = 0 (artinian only)
  int artinian_top() const;
  // total k-dimension (artinian only)
  int length() const;

  FpPoly nf(const FpPoly& f) const { return poly_reduce(field_, f, gb_); }
  FpPoly nf_mul(const FpPoly& a, const FpPoly& b) const {
    return nf(poly_mul(field_, a, b));
  }
  FpPoly parse(const std::string& text) const {
    return nf(parse_fp_poly(field_, text, var_names_));
  }
  std::string to_string(const FpPoly& p) const {
    return poly_to_string(field_, p, var_names_);
  }

  // standard monomials of total degree d, degrevlex-descending
  const std::vector<Monomial>& std_monomials(int d) const;
  int hilbert(int d) const {
    return d < 0 ? 0 : static_cast<int>(std_monomials(d).size());
  }
  // index of a standard monomial within its degree basis; -1 if not standard
  int std_index(const Monomial& m) const;

  // NF of an arbitrary monomial as a sparse vector over std_monomials(deg m)
  const SparseVec& nf_monomial(const Monomial& m) const;

  // scatter a homogeneous polynomial of degree d (or 0) over std_monomials(d)
  SparseVec poly_to_vec(const FpPoly& p, int d) const;
  FpPoly vec_to_poly(const SparseVec& v, int d) const;

  FpPoly var_poly(int i) const {
    return poly_monomial(field_, Monomial::var(i), field_.one());
  }

  std::string describe() const;

 private:
  FpField field_;
  std::vector<std::string> var_names_;
  std::vector<FpPoly> relations_;
  std::vector<FpPoly> gb_;
  std::vector<Monomial> gb_leads_;
  bool artinian_ = false;
  mutable int artinian_top_ = -1;
  mutable int length_ = -1;

  mutable std::vector<std::unique_ptr<std::vector<Monomial>>> std_cache_;
  mutable std::vector<std::unordered_map<uint64_t, int>> std_index_cache_;
  mutable std::unordered_map<uint64_t, SparseVec> nf_cache_;

  bool divisible_by_lead(const Monomial& m) const;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(uint32_t p, std::vector<std::string> var_names,
                  const std::vector<std::string>& relation_texts);

// Hilbert function computed the slow way, as the corank of the degree-d span of
// {u*g : g relation} over the full monomial basis. Test oracle for hilbert().
int hilbert_by_rank(const RingPresentation& ring, int d);

} // namespace fitres

#endif
