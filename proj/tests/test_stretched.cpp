#include <doctest.h>

#include "fitres/stretched.hpp"
#include "fitres/prng.hpp"

using namespace fitres;

TEST_CASE("stretched Gorenstein normal forms") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  CHECK(sg.ring->length() == 5);
  CHECK(sg.ring->artinian_top() == 2);
  CHECK(sg.ring->hilbert(1) == 3);
  CHECK(sg.ring->hilbert(2) == 1);
  // u_i x_i^2 = x_1^s and mixed products vanish
  for (int i = 1; i < 3; ++i)
    CHECK(sg.ring->nf(sg.ring->parse("x" + std::to_string(i + 1) + "^2")) ==
          sg.ring->nf(sg.ring->parse("x1^2")));
  CHECK(sg.ring->nf(sg.ring->parse("x1*x2")).is_zero());
  CHECK(sg.ring->nf(sg.ring->parse("x2*x3")).is_zero());
  // soc = m^2 = (x1^2), one-dimensional
  GradedIdeal soc = socle(sg.ring);
  CHECK(soc.dim_at(2) == 1);
  CHECK(soc.contains(sg.ring->parse("x1^2")));

  auto sg2 = build_stretched(101, 2, 2, {1});
  CHECK(sg2.ring->describe() == "k[x1,x2]/(x1*x2, x1^2 + 100*x2^2)");

  // nontrivial units enter the x_i^2 rewriting
  auto sgu = build_stretched(101, 3, 2, {2, 5});
  CHECK(sgu.ring->nf(sgu.ring->parse("2x2^2")) == sgu.ring->nf(sgu.ring->parse("x1^2")));
  CHECK(sgu.ring->nf(sgu.ring->parse("5x3^2")) == sgu.ring->nf(sgu.ring->parse("x1^2")));

  CHECK_THROWS_AS(build_stretched(2, 3, 2, {1, 1}), EngineError);   // CharTwo
  CHECK_THROWS_AS(build_stretched(101, 3, 2, {0, 1}), EngineError); // InvalidUnit
  CHECK_THROWS_AS(build_stretched(101, 1, 2, {}), EngineError);
  // graded Gorenstein h-vectors are symmetric: s > 2 requires e = 1
  CHECK_THROWS_AS(build_stretched(101, 3, 3, {1, 1}), EngineError);
}

TEST_CASE("annihilated generator via residue column reduction") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  const auto& R = *sg.ring;

  SUBCASE("1x2 matrix [x1 x2]: x3 kills the reduced column directly") {
    GradedMatrix A({sg.ring, {1, 1}}, {sg.ring, {0}});
    A.set_entry(0, 0, R.parse("x1"));
    A.set_entry(0, 1, R.parse("x2"));
    auto ann = find_annihilated_generator(A, sg);
    const auto& col = ann.transformed.column(ann.column);
    for (const auto& [i, p] : col)
      CHECK(R.nf_mul(p, R.var_poly(2)).is_zero());
  }
  SUBCASE("on the resolution of k, step mu + 1") {
    Resolution res = Resolution::of_module(residue_field_presentation(sg.ring), 3);
    auto ann = find_annihilated_generator(res.diff(2), sg);
    for (const auto& [i, p] : ann.transformed.column(ann.column))
      CHECK(R.nf_mul(p, R.var_poly(2)).is_zero());
  }
  SUBCASE("random minimal matrices with more columns than rows") {
    Prng rng(31);
    for (int t = 0; t < 50; ++t) {
      int rows = rng.range(1, 2), cols = rows + rng.range(1, 2);
      GradedMatrix A({sg.ring, std::vector<int>(cols, 1)},
                     {sg.ring, std::vector<int>(rows, 0)});
      for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
          if (rng.below(2)) continue;
          std::vector<FpPoly::Term> ts;
          ts.push_back({Monomial::var(static_cast<int>(rng.below(3))),
                        static_cast<uint32_t>(rng.range(1, 100))});
          A.set_entry(i, j, poly_from_terms(R.field(), std::move(ts)));
        }
      auto ann = find_annihilated_generator(A, sg);
      for (const auto& [i, p] : ann.transformed.column(ann.column))
        CHECK(R.nf_mul(p, R.var_poly(2)).is_zero());
    }
  }
  SUBCASE("hypothesis cols > rows enforced") {
    GradedMatrix A({sg.ring, {1}}, {sg.ring, {0}});
    A.set_entry(0, 0, R.parse("x1"));
    CHECK_THROWS_AS(find_annihilated_generator(A, sg), EngineError);
  }
}

TEST_CASE("tracked resolution follows the claim recursion") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  GradedMatrix C({sg.ring, {1}}, {sg.ring, {0}});
  C.set_entry(0, 0, sg.ring->parse("x3"));
  auto tr = tracked_resolution(sg, C, 7);
  CHECK(tr.counts_ok);
  CHECK(tr.power_bound_ok);
  // (gamma, delta) transitions (1,1) -> (2,1) -> (2,2) -> (4,2) -> ...
  REQUIRE(tr.steps.size() == 7);
  int want_gamma[8] = {0, 1, 1, 2, 2, 4, 4, 8};
  for (const auto& st : tr.steps) {
    CHECK(st.gamma == want_gamma[st.n]);
    CHECK(st.x1_block_size == st.gamma);
  }
  // designated columns stay independent in mF/m^2F: each is a single
  // variable times a basis element, verified literally in the matrix
  for (const auto& st : tr.steps) {
    if (st.n < 2) continue;
    const GradedMatrix& D = tr.res.diff(st.n);
    for (int k = 0; k < st.delta; ++k) {
      const auto& colx2 = D.column(k);
      REQUIRE(colx2.size() == 1);
      CHECK(colx2[0].second == sg.ring->parse("x2"));
      const auto& colx3 = D.column(st.delta + k);
      REQUIRE(colx3.size() == 1);
      CHECK(colx3[0].second == sg.ring->parse("x3"));
    }
  }

  // a designated generator that x_1 or x_2 fails to kill is rejected
  GradedMatrix Bad({sg.ring, {1}}, {sg.ring, {0}});
  Bad.set_entry(0, 0, sg.ring->parse("x1"));
  CHECK_THROWS_AS(tracked_resolution(sg, Bad, 3), EngineError); // TrackingLost

  CHECK_THROWS_AS(tracked_resolution(build_stretched(101, 2, 2, {1}), C, 3), EngineError);
}

TEST_CASE("theorem verifier over stretched rings") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  ModulePresentation K = residue_field_presentation(sg.ring);
  auto rep = verify_theorem_sg(sg, K, 2, 8);
  CHECK(rep.all_pass);
  CHECK(rep.per_r[0].constructive_bound == 5); // mu + 4
  CHECK(rep.per_r[1].constructive_bound == 6); // mu + 1 + 2*1 + 2
  CHECK(rep.per_r[0].onset == 1);
  CHECK(rep.per_r[1].onset == 2);

  // a cyclic module over a ring with nontrivial units
  auto sg3 = build_stretched(101, 3, 2, {2, 3});
  ModulePresentation M3 = cyclic_presentation(sg3.ring, {sg3.ring->parse("x2")});
  auto rep3 = verify_theorem_sg(sg3, M3, 2, 8);
  CHECK(rep3.all_pass);

  // e = 2 rejected, but observable
  auto sg2 = build_stretched(101, 2, 2, {1});
  GradedMatrix C({sg2.ring, {1}}, {sg2.ring, {0}});
  C.set_entry(0, 0, sg2.ring->parse("x1"));
  Resolution pre = Resolution::of_image(C, 1);
  CHECK_THROWS_AS(verify_theorem_sg(sg2, pre.module(), 1, 6), EngineError);
  auto rep2 = verify_theorem_sg(sg2, pre.module(), 1, 6, true);
  CHECK(!rep2.hypothesis_ok);
  CHECK(rep2.per_r[0].onset == -1);
}

TEST_CASE("socle witness: spliced complexes") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  for (int n = 1; n <= 4; ++n) {
    auto rep = socle_witness(sg.ring, n);
    CHECK(rep.pass);
    CHECK(rep.equals_socle);
    CHECK(rep.differs_from_m);
    CHECK(rep.beta0 == rep.beta0_dual);
  }
  // hypersurface case: alternating [x],[x^2], I = (x^2) = soc
  auto R = make_ring(101, {"x"}, {"x^3"});
  auto rep = socle_witness(R, 2);
  CHECK(rep.pass);
  CHECK(rep.minor_ideal == "(x^2)");

  // non-Gorenstein rings are rejected
  auto R2 = make_ring(101, {"x", "y"}, {"x^2", "x*y", "y^2"});
  CHECK_THROWS_AS(socle_witness(R2, 2), EngineError);
}
