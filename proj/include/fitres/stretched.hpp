#ifndef FITRES_STRETCHED_HPP
#define FITRES_STRETCHED_HPP

#include "fitres/minors.hpp"

namespace fitres {

// Artinian stretched Gorenstein ring in normal form:
//   k[x_1..x_e] / ({x_i x_j : i != j}, {x_1^s - u_i x_i^2 : i >= 2})
// with m^i = (x_1^i) for i >= 2 and soc(R) = m^s one-dimensional.
struct StretchedGorensteinRing {
  RingPtr ring;
  int e = 0;
  int s = 0;
  std::vector<uint32_t> units; // u_2 .. u_e
};

StretchedGorensteinRing build_stretched(uint32_t p, int e, int s,
                                        std::vector<uint32_t> units);

struct AnnihilatedGenerator {
  GradedMatrix transformed; // column-equivalent to the input
  int column;               // x_e * column == 0, a minimal generator
};

// Column-reduces the x_e-coefficient residue matrix within each column-degree
// class and returns a column annihilated by x_e. Requires cols > rows.
AnnihilatedGenerator find_annihilated_generator(const GradedMatrix& A,
                                                const StretchedGorensteinRing& sg);

struct TrackedStep {
  int n = 0;
  int gamma = 0;       // count of designated x_1-columns placed in d_n
  int delta = 0;       // count of designated (x_2, x_3) column pairs in d_n
  int betti = 0;
  int x1_block_size = 0; // x_1 * Id block located literally in d_n
};

struct TrackedResolution {
  Resolution res;
  std::vector<TrackedStep> steps;
  bool counts_ok = true;      // (gamma, delta) -> (2 delta, gamma) transitions
  bool power_bound_ok = true; // x_1-count at least 2^floor((n-1)/2)
  std::string note;
};

// Lemma-4.7-style resolution of the submodule N = im(C) whose first column is
// annihilated by x_e, choosing each kernel basis to start with the designated
// columns x_2 w, x_3 w, x_1 w of the claim. Raises TrackingLost if a designated
// column fails to be a fresh minimal syzygy.
TrackedResolution tracked_resolution(const StretchedGorensteinRing& sg, const GradedMatrix& C,
                                     int n_max);

struct TheoremRangeReportSg {
  int r = 0;
  int onset = -1;
  bool persists = true;
  int constructive_bound = 0; // mu(M) + 1 + (r==1 ? 3 : 2 ceil(log2 r) + 2)
  bool onset_within_bound = true;
  std::vector<MinorVerdict> verdicts;
};

struct SgTheoremReport {
  bool hypothesis_ok = true;
  std::string hypothesis_note;
  std::vector<TheoremRangeReportSg> per_r;
  bool all_pass = true;
};

SgTheoremReport verify_theorem_sg(const StretchedGorensteinRing& sg,
                                  const ModulePresentation& M, int r, int n_to,
                                  bool observe = false);

struct SocleWitnessReport {
  int n = 0;
  bool is_complex = false;
  bool minimal = false;
  bool exact = false;
  int exactness_cap = 0;
  std::string minor_ideal;
  bool equals_socle = false;
  bool differs_from_m = false;
  int beta0 = 0;       // rank of the presenting free module of M_n
  int beta0_dual = -1; // from dual_presentation of the n-th syzygy, cross-check
  bool pass = false;
  std::string note;
};

// Splices ... -> F_1 -> R -[x_1^s]-> R -> F_1* -> ... -> F_{n-1}* -> 0 and
// certifies it as the minimal resolution of M_n = (n-th syzygy of k) dualized;
// extracts I_{n,1}(M_n) and compares with soc(R) and m.
SocleWitnessReport socle_witness(RingPtr ring, int n, int extra = 2);

} // namespace fitres

#endif
