#include <doctest.h>

#include "fitres/ideal.hpp"

using namespace fitres;

TEST_CASE("reduced groebner bases of the paper's rings") {
  // (xz, yz): already a GB, coprime-lead pairs reduce to zero
  auto R = make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"});
  REQUIRE(R->groebner_basis().size() == 2);
  // canonical order: ascending lead monomials (yz < xz in degrevlex)
  CHECK(R->to_string(R->groebner_basis()[0]) == "y*z");
  CHECK(R->to_string(R->groebner_basis()[1]) == "x*z");

  // (x1x2, x1^2 - x2^2): completion adds x2^3
  auto R2 = make_ring(101, {"x1", "x2"}, {"x1x2", "x1^2-x2^2"});
  bool has_cube = false;
  for (const auto& g : R2->groebner_basis())
    if (g.lead_monomial() == Monomial::var(1, 3)) has_cube = true;
  CHECK(has_cube);

  // empty relations: R = S
  auto R3 = make_ring(101, {"x", "y"}, {});
  CHECK(R3->groebner_basis().empty());
  CHECK(R3->is_polynomial_ring());

  CHECK_THROWS_AS(make_ring(101, {"x", "y"}, {"x + y^2"}), EngineError);   // inhomogeneous
  CHECK_THROWS_AS(make_ring(101, {"x", "x"}, {}), EngineError);            // name clash
}

TEST_CASE("normal forms") {
  auto R = make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"});
  CHECK(R->to_string(R->parse("x*z + x^2")) == "x^2");
  for (const auto& g : R->relations()) CHECK(R->nf(g).is_zero());

  auto R2 = make_ring(101, {"x1", "x2"}, {"x1x2", "x1^2-x2^2"});
  // dim R_2 = 1; the computed GB rewrites x1^2 into the standard representative
  CHECK(R2->hilbert(2) == 1);
  CHECK(R2->nf(R2->parse("x1^2")) == R2->nf(R2->parse("x2^2")));
  // idempotence
  FpPoly p = R2->parse("x1^2 + 3x1x2 + 5x2^2");
  CHECK(R2->nf(p) == R2->nf(R2->nf(p)));
}

TEST_CASE("hilbert functions by two independent counts") {
  auto R = make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"});
  int expected[7] = {1, 3, 4, 5, 6, 7, 8};
  for (int d = 0; d <= 6; ++d) {
    CHECK(R->hilbert(d) == expected[d]);
    CHECK(hilbert_by_rank(*R, d) == expected[d]);
  }
  auto R2 = make_ring(101, {"x"}, {"x^3"});
  CHECK(R2->hilbert(0) == 1);
  CHECK(R2->hilbert(1) == 1);
  CHECK(R2->hilbert(2) == 1);
  CHECK(R2->hilbert(3) == 0);
  CHECK(R2->is_artinian());
  CHECK(R2->artinian_top() == 2);
  CHECK(R2->length() == 3);

  auto R3 = make_ring(101, {"x", "y"}, {});
  for (int d = 0; d <= 5; ++d) CHECK(R3->hilbert(d) == d + 1);
  CHECK(!R3->is_artinian());
  CHECK_THROWS_AS(R3->artinian_top(), EngineError);

  // artinian length equals the sum of the Hilbert function
  auto R4 = make_ring(101, {"x1", "x2"}, {"x1x2", "x1^2-x2^2"});
  int sum = 0;
  for (int d = 0; d <= R4->artinian_top(); ++d) sum += R4->hilbert(d);
  CHECK(sum == R4->length());
  CHECK(R4->hilbert(R4->artinian_top()) > 0);
  CHECK(R4->hilbert(R4->artinian_top() + 1) == 0);
}

TEST_CASE("powers of the maximal ideal") {
  auto sgring = make_ring(101, {"x1", "x2", "x3"},
                          {"x1x2", "x1x3", "x2x3", "x1^2-x2^2", "x1^2-x3^2"});
  GradedIdeal m2 = max_ideal_power(sgring, 2);
  // m^2 is principal, generated by the normal form of x1^2
  CHECK(m2.minimal_generators().size() == 1);
  CHECK(m2.contains(sgring->parse("x1^2")));
  CHECK(m2.dim_at(2) == 1);

  GradedIdeal m1 = max_ideal_power(sgring, 1);
  CHECK(m1.minimal_generators().size() == 3);

  auto R2 = make_ring(101, {"x"}, {"x^3"});
  CHECK(max_ideal_power(R2, 3).is_zero());
  CHECK(!max_ideal_power(R2, 0).is_zero());
  CHECK(max_ideal_power(R2, 0).contains_unit());
}

TEST_CASE("socle computations") {
  auto R = make_ring(101, {"x"}, {"x^3"});
  GradedIdeal soc = socle(R);
  CHECK(soc.contains(R->parse("x^2")));
  CHECK(soc.dim_at(2) == 1);
  CHECK(soc.dim_at(1) == 0);

  // stretched e=3, s=2: soc = m^2, one-dimensional
  auto sg = make_ring(101, {"x1", "x2", "x3"},
                      {"x1x2", "x1x3", "x2x3", "x1^2-x2^2", "x1^2-x3^2"});
  GradedIdeal soc2 = socle(sg);
  GradedIdeal m2 = max_ideal_power(sg, 2);
  CHECK(ideal_compare(soc2, m2, 2).rel == IdealRel::Equal);
  CHECK(soc2.dim_at(2) == 1);

  // k[x,y]/(x^2,xy,y^2): socle = m, two-dimensional
  auto R3 = make_ring(101, {"x", "y"}, {"x^2", "x*y", "y^2"});
  GradedIdeal soc3 = socle(R3);
  CHECK(soc3.dim_at(1) == 2);
  CHECK(ideal_compare(soc3, max_ideal_power(R3, 1), 1).rel == IdealRel::Equal);

  // socle generators are killed by m
  for (const auto& s : soc3.generators())
    for (int v = 0; v < R3->nvars(); ++v)
      CHECK(R3->nf_mul(s, R3->var_poly(v)).is_zero());

  CHECK_THROWS_AS(socle(make_ring(101, {"x", "y"}, {"x*y"})), EngineError);
}

TEST_CASE("ideal comparison with witnesses") {
  auto R = make_ring(101, {"x"}, {"x^3"});
  GradedIdeal a(R, {R->parse("x^2")});
  GradedIdeal b = max_ideal_power(R, 2);
  CHECK(ideal_compare(a, b, 2).rel == IdealRel::Equal);

  GradedIdeal c(R, {R->parse("x")});
  auto cmp = ideal_compare(a, c, 2);
  CHECK(cmp.rel == IdealRel::AProperInB);
  REQUIRE(cmp.witness.has_value());
  CHECK(R->to_string(*cmp.witness) == "x");

  auto R49b = make_ring(101, {"x1", "x2"}, {"x1x2", "x1^2-x2^2"});
  GradedIdeal i1(R49b, {R49b->parse("x1")});
  GradedIdeal i2(R49b, {R49b->parse("x2")});
  auto cmp2 = ideal_compare(i1, i2, 1);
  CHECK(cmp2.rel == IdealRel::Incomparable);
  CHECK(cmp2.witness.has_value());

  CHECK_THROWS_AS(ideal_compare(a, c, 0), EngineError); // CapTooLow
}
