#ifndef FITRES_RESOLUTION_HPP
#define FITRES_RESOLUTION_HPP

#include <limits>

#include "fitres/freemod.hpp"

namespace fitres {

// One generator of a syzygy module: a homogeneous column over the source free
// module of the previous matrix.
struct SyzygyGen {
  int degree;
  std::vector<std::pair<int, FpPoly>> column; // (row, entry), rows ascending
};

// A column vector that a caller requires to appear, in order, at the front of
// its degree class in the next syzygy basis.
using ForcedColumn = std::vector<std::pair<int, FpPoly>>;

struct KernelGenResult {
  GradedMatrix matrix;   // minimal generators of ker(A) as columns
  int cap;               // degrees searched
  std::vector<int> forced_positions; // column index of each forced generator
};

// Minimal generators of ker(A) through internal degree `cap`, found by
// degree-ascending kernel computations modulo multiples of earlier generators.
// Forced columns (if any) are verified to lie in the kernel and to be fresh
// minimal generators, and are placed first within their degree class;
// a failed verification raises TrackingLost.
KernelGenResult kernel_generators(const GradedMatrix& A, int cap,
                                  const std::vector<ForcedColumn>& forced = {});

// spec'd single step: requires A's entries in m and cap >= max source degree
GradedMatrix syzygy_step(const GradedMatrix& A, int cap);

constexpr int kUnbounded = std::numeric_limits<int>::max();

struct StepInfo {
  int cap = 0;               // kernel searched through this degree
  bool complete = false;     // generator list provably complete (artinian bound)
  int true_through = 0;      // degrees through which the generator list is
                             // provably the true one; kUnbounded when complete
};

// A certified prefix of a minimal graded free resolution. For a cokernel
// module the chain is F_len -> ... -> F_1 -> F_0 (-> M -> 0); for an image
// module N = im(C) the chain resolves N with F_0 mapping onto the generators.
class Resolution {
 public:
  static Resolution of_module(const ModulePresentation& M, int n_max, int slack = 2);
  // resolve im(C) with F_0 = src(C); requires the columns of C to be minimal
  // generators (they are re-minimalized greedily if not)
  static Resolution of_image(const GradedMatrix& C, int n_max, int slack = 2);

  void extend(int n_max);
  // one further step whose leading columns within their degree class are the
  // given designated syzygies (tracked resolutions); TrackingLost on failure
  void extend_with_forced(const std::vector<ForcedColumn>& forced,
                          std::vector<int>* forced_positions = nullptr);

  const ModulePresentation& module() const { return module_; }
  int length() const { return static_cast<int>(diffs_.size()); }
  bool finite() const { return finite_; }
  int mu() const { return F0_.rank(); }

  const GradedFreeModule& free_module(int n) const; // 0 <= n <= length
  const GradedMatrix& diff(int n) const;            // 1 <= n <= length
  int betti(int n) const;
  const StepInfo& step_info(int n) const;           // 1 <= n <= length

  // All generators of F_n are provably genuine minimal generators of the true
  // syzygy module (soundness of sub-matrix minors).
  bool gens_genuine(int n) const;
  // Both the rows and columns of diff(n) form the full true differential
  // (needed to certify a proper/zero minors verdict).
  bool full_matrix_certified(int n) const;

  std::string betti_table() const;

 private:
  Resolution() = default;
  void step();
  void step_impl(const std::vector<ForcedColumn>& forced, std::vector<int>* forced_positions);
  const GradedMatrix& last_matrix() const;

  ModulePresentation module_{nullptr, GradedMatrix({nullptr, {}}, {nullptr, {}})};
  GradedFreeModule F0_{nullptr, {}};
  std::unique_ptr<GradedMatrix> image_gens_; // image-module case: the generator matrix
  std::vector<GradedMatrix> diffs_;
  std::vector<StepInfo> info_;
  bool finite_ = false;
  int slack_ = 2;
};

// Replace the columns of A by minimal generators of the column span (degree-
// ascending greedy). Column order within a degree is preserved.
GradedMatrix minimal_generators_of_image(const GradedMatrix& A);

struct HomologyEntry {
  int position; // between diffs[k] and diffs[k+1], 1-based
  int degree;
  int dim;
};

struct ExactnessReport {
  bool is_complex = true;               // composition of consecutive maps is zero
  std::string complex_failure;          // offending entry description
  std::vector<HomologyEntry> homology;  // nonzero degree-wise homology only
  bool exact() const { return is_complex && homology.empty(); }
};

// diffs[k]: C_{k+1} -> C_k for a chain ... -> C_1 -> C_0 given in order
// D_1, D_2, ..., checked through internal degree `cap` at every inner position.
ExactnessReport verify_exactness(const std::vector<const GradedMatrix*>& diffs, int cap);

// Hom_R(M, R) over an artinian ring, presented minimally. Dual generator
// degrees are re-graded by a global shift (recorded) to stay non-negative.
ModulePresentation dual_presentation(const ModulePresentation& M);

struct BettiGrowthReport {
  int factor = 0; // 2e - l + h - 1
  int mu = 0;
  bool all_hold = true;
  std::vector<std::string> lines;
};

// Checks beta_{n+1} >= (2e - l + h - 1) * beta_n for certified n >= mu(M).
BettiGrowthReport betti_growth_check(const Resolution& res);

// degree-wise Euler characteristic at degree d (test oracle):
//   sum_i (-1)^i dim (F_i)_d == dim M_d
bool euler_characteristic_holds(const Resolution& res, int d);

} // namespace fitres

#endif
