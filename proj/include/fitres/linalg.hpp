#ifndef FITRES_LINALG_HPP
#define FITRES_LINALG_HPP

#include <span>
#include <vector>

#include "fitres/scalar.hpp"

namespace fitres {

// Sparse vector over F_p: (index, value) pairs sorted by index, values in (0, p).
struct SparseVec {
  std::vector<std::pair<int, uint32_t>> e;

  bool is_zero() const { return e.empty(); }
  void push(int idx, uint32_t val) { e.push_back({idx, val}); }
  uint32_t at(int idx) const {
    auto it = std::lower_bound(e.begin(), e.end(), idx,
                               [](const auto& a, int b) { return a.first < b; });
    return (it != e.end() && it->first == idx) ? it->second : 0;
  }
};

// Incremental Gaussian elimination over F_p with sparse columns.
//
// Columns are inserted in a fixed order; each is reduced against the pivots
// found so far. A dependent column yields the unique expression of itself over
// the previously accepted (independent) columns, which is exactly the canonical
// reduced-row-echelon kernel combination — so kernel bases are deterministic
// and independent of internal pivoting.
class Eliminator {
 public:
  Eliminator(const FpField& f, int nrows, bool track_combinations);

  struct Reduced {
    SparseVec residual; // empty iff the vector lies in the current span
    SparseVec comb;     // expression over original ids of pivots (if tracking)
  };

  // Reduce v against the current pivots. Does not modify the basis.
  Reduced reduce(const SparseVec& v);

  // Install a nonzero residual from reduce() as a new pivot. No reduce() result
  // obtained before another install may be installed later.
  void install(const Reduced& r, int orig_id);

  // reduce-and-install convenience; returns true if v was independent.
  bool add(const SparseVec& v, int orig_id);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows() const { return nrows_; }
  int pivot_orig(int slot) const;

 private:
  struct Pivot {
    int row;        // pivot row: zero in all earlier pivots' columns
    SparseVec col;  // unit at `row`
    SparseVec comb; // column as combination of original inserted columns
    int orig;
  };

  FpField f_;
  int nrows_;
  bool track_;
  std::vector<Pivot> pivots_;
  // dense scratch for the residual, plus one for combination accumulation
  std::vector<uint32_t> scratch_;
  std::vector<int> touched_;
  std::vector<uint32_t> comb_scratch_;
  std::vector<int> comb_touched_;
};

struct KernelBasis {
  // canonical kernel vectors over column indices; one per dependent column
  std::vector<SparseVec> vectors;
  int rank = 0;
};

// Kernel of the matrix whose columns are `cols` (each a sparse vector of length
// nrows), processed left to right.
KernelBasis kernel_basis(const FpField& f, int nrows, std::span<const SparseVec> cols);

int rank_of(const FpField& f, int nrows, std::span<const SparseVec> cols);

} // namespace fitres

#endif
