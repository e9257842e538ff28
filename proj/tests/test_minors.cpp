#include <doctest.h>

#include "fitres/minors.hpp"
#include "fitres/prng.hpp"

using namespace fitres;

TEST_CASE("minors ideals of explicit matrices") {
  auto R = make_ring(101, {"x", "y"}, {"x*y"});
  GradedMatrix A({R, {1, 1}}, {R, {0, 0}});
  A.set_entry(0, 0, R->parse("y"));
  A.set_entry(1, 1, R->parse("x"));

  GradedIdeal I1 = minors_ideal(A, 1);
  CHECK(ideal_compare(I1, max_ideal_power(R, 1), 1).rel == IdealRel::Equal);
  GradedIdeal I2 = minors_ideal(A, 2);
  CHECK(I2.is_zero()); // det = xy = 0 in R

  CHECK(minors_ideal(A, 0).contains_unit());
  CHECK(minors_ideal(A, 3).is_zero()); // r exceeds the format

  // permutation invariance
  GradedMatrix P({R, {1, 1}}, {R, {0, 0}});
  P.set_entry(0, 1, R->parse("x"));
  P.set_entry(1, 0, R->parse("y"));
  for (int r = 1; r <= 2; ++r) {
    GradedIdeal a = minors_ideal(A, r), b = minors_ideal(P, r);
    int cap = std::max({a.max_generator_degree(), b.max_generator_degree(), r});
    CHECK(ideal_compare(a, b, cap).rel == IdealRel::Equal);
  }
}

TEST_CASE("minor determinants land in m^2") {
  auto R = make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"});
  GradedMatrix A({R, {1, 1}}, {R, {0, 0}});
  A.set_entry(0, 0, R->parse("x"));
  A.set_entry(0, 1, R->parse("y"));
  A.set_entry(1, 0, R->parse("z"));
  A.set_entry(1, 1, R->parse("x"));
  FpPoly d = minor_det(A, {0, 1}, {0, 1});
  CHECK(d == R->parse("x^2 - y*z"));
  CHECK(max_ideal_power(R, 2).contains(d));
  CHECK(check_minors_in_mr(A, 1));
  CHECK(check_minors_in_mr(A, 2));

  // empty matrix: vacuously true
  GradedMatrix E({R, {}}, {R, {}});
  CHECK(check_minors_in_mr(E, 1));

  // injected bug: a unit entry must be rejected
  GradedMatrix U({R, {0}}, {R, {0}});
  U.set_entry(0, 0, R->parse("1"));
  CHECK_THROWS_AS(check_minors_in_mr(U, 1), EngineError);
}

TEST_CASE("verdicts across a resolution") {
  auto R = make_ring(101, {"x"}, {"x^3"});
  Resolution res = Resolution::of_module(residue_field_presentation(R), 6);
  for (int n = 1; n <= 6; ++n) {
    MinorVerdict v = minors_of_resolution(res, n, 1);
    CHECK(v.certified);
    if (n % 2 == 1) {
      CHECK(v.rel == MinorRel::Equal); // (x) = m here
    } else {
      CHECK(v.rel == MinorRel::Proper);
      REQUIRE(v.witness.has_value());
      CHECK(R->to_string(*v.witness) == "x");
      GradedIdeal I = v.ideal(R);
      CHECK(I.contains(R->parse("x^2")));
      CHECK(!I.contains(R->parse("x")));
    }
  }
  // r = 0 and r beyond the format
  CHECK(minors_of_resolution(res, 1, 0).rel == MinorRel::Equal);
  MinorVerdict big = minors_of_resolution(res, 1, 2);
  CHECK(big.rel == MinorRel::Zero);
  // m^3 = 0, so the zero ideal of 3x3 minors equals m^3
  CHECK(minors_of_resolution(res, 1, 3).rel == MinorRel::Equal);
}

TEST_CASE("tensor submatrix law") {
  auto R = make_ring(101, {"x"}, {"x^3"});
  GradedMatrix A({R, {1}}, {R, {0}});
  A.set_entry(0, 0, R->parse("x"));
  GradedMatrix B = kron_with_identity(A, 2);
  std::vector<int> rows{0, 1}, cols{0, 1};
  // (x) * (x) = (x^2) inside I_2(diag(x,x)) = (x^2)
  CHECK(check_tensor_submatrix_law(A, 2, B, {1, 1}, rows, cols));
  // a zero part of the composition exercises I_0 = (1)
  CHECK(check_tensor_submatrix_law(A, 2, B, {1, 0}, rows, cols));

  // a wrong embedding is rejected: the second diagonal copy is missing
  GradedMatrix C({R, {1, 1}}, {R, {0, 0}});
  C.set_entry(0, 0, R->parse("x"));
  CHECK_THROWS_AS(check_tensor_submatrix_law(A, 2, C, {1, 1}, rows, cols), EngineError);
}

TEST_CASE("summand minor inclusion") {
  auto R = make_ring(101, {"x", "y"}, {"x*y"});
  // M = N + R (a free summand): I_{m,r}(N) = I_{m,r}(M) for m >= 1
  GradedMatrix An({R, {1}}, {R, {0}});
  An.set_entry(0, 0, R->parse("x"));
  GradedMatrix D({R, {1}}, {R, {0, 0}});
  D.set_entry(0, 0, R->parse("x"));
  Resolution resM = Resolution::of_module(coker_presentation(D), 4);
  Resolution resN = Resolution::of_module(coker_presentation(An), 4);
  for (int m = 1; m <= 3; ++m) CHECK(check_summand_inclusion(resM, resN, 0, m, 1));
}

TEST_CASE("unit change of basis leaves minor ideals invariant") {
  auto R = make_ring(101, {"x", "y", "z"}, {"x*z", "y*z"});
  Resolution res = Resolution::of_module(residue_field_presentation(R), 4);
  const GradedMatrix& d2 = res.diff(2);
  GradedMatrix t = d2;
  const auto& f = R->field();
  Prng rng(21);
  for (int j = 0; j < t.cols(); ++j)
    for (int k = j + 1; k < t.cols(); ++k) {
      int d = t.src().gen_degrees[k] - t.src().gen_degrees[j];
      if (d < 0) continue;
      FpPoly c;
      if (d == 0) {
        c = poly_constant(f, static_cast<uint32_t>(rng.range(0, 5)));
      } else {
        std::vector<FpPoly::Term> ts;
        const auto& mons = R->std_monomials(d);
        ts.push_back({mons[rng.below(mons.size())], static_cast<uint32_t>(rng.range(1, 100))});
        c = poly_from_terms(f, std::move(ts));
      }
      t.add_column_multiple(k, j, c);
    }
  for (int r = 1; r <= 2; ++r) {
    GradedIdeal a = minors_ideal(d2, r), b = minors_ideal(t, r);
    int cap = std::max({a.max_generator_degree(), b.max_generator_degree(), r});
    CHECK(ideal_compare(a, b, cap).rel == IdealRel::Equal);
  }
}
