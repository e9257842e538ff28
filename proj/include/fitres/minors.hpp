#ifndef FITRES_MINORS_HPP
#define FITRES_MINORS_HPP

#include "fitres/resolution.hpp"

namespace fitres {

// determinant of the submatrix on the given rows/columns (cofactor expansion)
FpPoly minor_det(const GradedMatrix& A, const std::vector<int>& rows,
                 const std::vector<int>& cols);

// The ideal generated by all r x r minors. r = 0 gives the unit ideal, r above
// the format gives the zero ideal. Enumeration is combinatorial; `budget`
// bounds the number of evaluated submatrices.
GradedIdeal minors_ideal(const GradedMatrix& A, int r, long budget = 2000000);

long minor_enumeration_count(const GradedMatrix& A, int r);

enum class MinorRel { Equal, Proper, Zero };

// Relation of I_{n,r} to m^r, decided through the degree-r span: degree-r
// minors span R_r iff the ideal equals m^r (Prop-2.2-style upper bound plus the
// standard-graded surjection R_1 x R_d -> R_{d+1}).
struct MinorVerdict {
  int n = 0;
  int r = 0;
  MinorRel rel = MinorRel::Zero;
  std::vector<FpPoly> ideal_gens; // minors found (all of them when exact)
  bool ideal_exact = false;       // full enumeration was feasible
  bool certified = false;
  std::optional<FpPoly> witness;  // monomial of m^r outside the ideal (proper/zero)
  std::string rel_string() const;

  GradedIdeal ideal(RingPtr ring) const { return GradedIdeal(std::move(ring), ideal_gens); }
  std::string to_line(const RingPtr& ring) const;
};

MinorVerdict minors_of_resolution(const Resolution& res, int n, int r);

// same verdict machinery on a standalone differential; the caller supplies the
// certification flags (columns are genuine minimal generators / the matrix is
// the full true differential)
MinorVerdict minors_vs_mr(const GradedMatrix& A, int n, int r, bool genuine_gens,
                          bool full_matrix);

// Prop-2.2-style assertion: every r x r minor of a matrix with entries in m
// lies in m^r. Returns true; throws Internal if violated.
bool check_minors_in_mr(const GradedMatrix& A, int r, long budget = 2000000);

// A (x) Id_l in the layout where row (i, copy c) sits at flat index i*l + c.
GradedMatrix kron_with_identity(const GradedMatrix& A, int ell);

// Verifies I_{r_1}(A) ... I_{r_l}(A) <= I_r(B) where A (x) Id_l embeds into B
// at the given row/column indices (flat Kronecker layout) and sum(r_i) = r.
bool check_tensor_submatrix_law(const GradedMatrix& A, int ell, const GradedMatrix& B,
                                const std::vector<int>& composition,
                                const std::vector<int>& row_idx,
                                const std::vector<int>& col_idx);

// Prop-2.4-style containment I_{m,r}(N) <= I_{n+m,r}(M) for N a direct summand
// of the n-th syzygy of M.
bool check_summand_inclusion(const Resolution& resM, const Resolution& resN, int n, int m,
                             int r);

} // namespace fitres

#endif
