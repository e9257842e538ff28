#ifndef FITRES_IDEAL_HPP
#define FITRES_IDEAL_HPP

#include <map>
#include <optional>

#include "fitres/ring.hpp"

namespace fitres {

enum class IdealRel { Equal, AProperInB, BProperInA, Incomparable };

// Homogeneous ideal of R given by generators in normal form, with degree-wise
// linear-span caches over the standard monomial bases.
class GradedIdeal {
 public:
  GradedIdeal(RingPtr ring, std::vector<FpPoly> generators);

  static GradedIdeal zero(RingPtr ring) { return GradedIdeal(std::move(ring), {}); }
  static GradedIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<FpPoly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains_unit() const;
  int max_generator_degree() const;

  // k-dimension of the degree-d component
  int dim_at(int d) const;
  bool contains(const FpPoly& f) const;

  // degree-ascending greedy minimal generators (basis of I/mI degree-wise)
  const std::vector<FpPoly>& minimal_generators() const;

  std::string to_string() const; // "(g1, g2)" over minimal generators, "0", "(1)"

 private:
  // reduced span basis of the degree-d component (mutable cache)
  Eliminator& span(int d) const;

  RingPtr ring_;
  std::vector<FpPoly> gens_;
  mutable std::map<int, std::unique_ptr<Eliminator>> span_cache_;
  mutable std::optional<std::vector<FpPoly>> min_gens_;
};

// the ideal m^r, generated by the normal forms of all degree-r monomials
GradedIdeal max_ideal_power(RingPtr ring, int r);

// ann_R(m) for artinian R, computed degree-wise as the kernel of the joint
// multiplication maps R_d -> (R_{d+1})^e
GradedIdeal socle(RingPtr ring);

struct IdealCompareResult {
  IdealRel rel;
  // generator of one ideal missing from the other, when containment is proper
  // or the ideals are incomparable
  std::optional<FpPoly> witness;
};

IdealCompareResult ideal_compare(const GradedIdeal& a, const GradedIdeal& b, int up_to);

// product ideal (generators pairwise multiplied)
GradedIdeal ideal_product(const GradedIdeal& a, const GradedIdeal& b);

} // namespace fitres

#endif
