#ifndef FITRES_FREEMOD_HPP
#define FITRES_FREEMOD_HPP

#include "fitres/ideal.hpp"
#include "fitres/ring.hpp"

namespace fitres {

// Graded free module given by its generator degrees, in the fixed basis order
// used by all matrices.
struct GradedFreeModule {
  RingPtr ring;
  std::vector<int> gen_degrees;

  int rank() const { return static_cast<int>(gen_degrees.size()); }
  int max_degree() const {
    int m = 0;
    for (int d : gen_degrees) m = std::max(m, d);
    return m;
  }
  int min_degree() const {
    if (gen_degrees.empty()) return 0;
    int m = gen_degrees[0];
    for (int d : gen_degrees) m = std::min(m, d);
    return m;
  }
  // k-dimension of the degree-d graded piece
  int dim_at(int d) const {
    int s = 0;
    for (int g : gen_degrees) s += ring->hilbert(d - g);
    return s;
  }
};

// Flattened basis of a free module's degree-d piece: for each generator j in
// order, the standard monomials of degree d - deg(j) in degrevlex order.
struct SliceLayout {
  int dim = 0;
  std::vector<int> offset;      // per generator
  std::vector<int> mono_count;  // per generator
};

SliceLayout slice_layout(const GradedFreeModule& F, int d);

// Homogeneous map between graded free modules; sparse column-major storage,
// entries kept in normal form. Entry (i,j) is homogeneous of degree
// deg(src_j) - deg(tgt_i) or zero.
class GradedMatrix {
 public:
  GradedMatrix(GradedFreeModule src, GradedFreeModule tgt);

  const GradedFreeModule& src() const { return src_; }
  const GradedFreeModule& tgt() const { return tgt_; }
  const RingPtr& ring() const { return src_.ring; }
  int rows() const { return tgt_.rank(); }
  int cols() const { return src_.rank(); }

  void set_entry(int i, int j, FpPoly p); // normalizes and validates degree
  const FpPoly& entry(int i, int j) const;
  const std::vector<std::pair<int, FpPoly>>& column(int j) const { return cols_[j]; }

  bool is_zero() const;
  // every entry lies in m (no unit entries)
  bool entries_in_m() const;
  int entry_count() const;

  // degree-d component as sparse columns over the slice layouts
  std::vector<SparseVec> degree_slice(int d, const SliceLayout& dom,
                                      const SliceLayout& cod) const;

  // column operations (change of basis of the source)
  void swap_columns(int a, int b);
  // col_dst += c * col_src; c homogeneous of degree deg(dst) - deg(src)
  void add_column_multiple(int dst, int src, const FpPoly& c);

  GradedMatrix transpose_with(GradedFreeModule new_src, GradedFreeModule new_tgt) const;

  std::string to_string() const;

 private:
  GradedFreeModule src_, tgt_;
  std::vector<std::vector<std::pair<int, FpPoly>>> cols_; // (row, poly), rows ascending
  FpPoly zero_;
};

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b); // a after b

// Gaussian pruning of unit entries: returns a matrix with no unit entries and
// the same cokernel; rank drops by the number of pruned pivots.
GradedMatrix minimalize(const GradedMatrix& a);

// A finitely presented graded module M = coker(A : F1 -> F0).
struct ModulePresentation {
  RingPtr ring;
  GradedMatrix presentation;
  // global grading shift applied when the module was built from duals; minor
  // ideals are reported in the original grading
  int degree_shift = 0;

  int beta0() const { return presentation.tgt().rank(); }
  int hilbert(int d) const; // dim_k M_d = dim F0_d - rank(slice_d A)
};

ModulePresentation residue_field_presentation(RingPtr ring);
ModulePresentation cyclic_presentation(RingPtr ring, const std::vector<FpPoly>& ideal_gens);
ModulePresentation coker_presentation(GradedMatrix A);

} // namespace fitres

#endif
