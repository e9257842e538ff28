#include <doctest.h>

#include "fitres/fiber_product.hpp"

using namespace fitres;

TEST_CASE("fiber product presentations") {
  auto S = make_ring(101, {"x", "y"}, {});
  auto T = make_ring(101, {"z"}, {});
  auto fp = fiber_product(S, T);
  CHECK(fp.total->describe() == "k[x,y,z]/(x*z, y*z)");
  CHECK(fp.e1 == 2);
  CHECK(fp.e2 == 1);
  // H_R(d) = H_S(d) + H_T(d) for d >= 1
  for (int d = 1; d <= 5; ++d) CHECK(fp.total->hilbert(d) == S->hilbert(d) + T->hilbert(d));
  // m_S m_T = 0 on the variable generators
  for (int i = 0; i < fp.e1; ++i)
    for (int j = 0; j < fp.e2; ++j)
      CHECK(fp.total
                ->nf_mul(fp.total->var_poly(fp.left_var(i)),
                         fp.total->var_poly(fp.right_var(j)))
                .is_zero());

  auto S2 = make_ring(101, {"x"}, {});
  auto T2 = make_ring(101, {"y"}, {});
  CHECK(fiber_product(S2, T2).total->describe() == "k[x,y]/(x*y)");

  // artinian factors
  auto S3 = make_ring(101, {"x"}, {"x^3"});
  auto T3 = make_ring(101, {"y"}, {"y^2"});
  auto fp3 = fiber_product(S3, T3);
  CHECK(fp3.total->hilbert(1) == 2);
  CHECK(fp3.total->hilbert(2) == 1);
  CHECK(fp3.total->hilbert(3) == 0); // H_S(3) = 0 since x^3 = 0

  CHECK_THROWS_AS(fiber_product(S, make_ring(101, {"x"}, {})), EngineError); // NameClash
}

TEST_CASE("canonical lift is a minimal complex but not exact") {
  auto S = make_ring(101, {"x", "y"}, {});
  auto T = make_ring(101, {"z"}, {});
  auto fp = fiber_product(S, T);
  Resolution resS = Resolution::of_module(residue_field_presentation(S), 3);
  auto lifted = lift_resolution_complex(resS, fp, true);
  REQUIRE(lifted.size() >= 2);
  // same matrices verbatim: [x y] and the Koszul column
  CHECK(lifted[0].entry(0, 0) == fp.total->parse("x"));
  CHECK(lifted[0].entry(0, 1) == fp.total->parse("y"));
  std::vector<const GradedMatrix*> ptrs;
  for (auto& d : lifted) ptrs.push_back(&d);
  auto rep = verify_exactness(ptrs, 4);
  CHECK(rep.is_complex);
  REQUIRE(!rep.homology.empty());
  // nonzero homology at position 1 in degree 2
  bool found = false;
  for (const auto& h : rep.homology)
    if (h.position == 1 && h.degree == 2 && h.dim > 0) found = true;
  CHECK(found);

  // a single lifted entry
  auto Sx = make_ring(101, {"x"}, {});
  auto Ty = make_ring(101, {"y"}, {});
  auto fp2 = fiber_product(Sx, Ty);
  GradedMatrix A({Sx, {1}}, {Sx, {0}});
  A.set_entry(0, 0, Sx->parse("x"));
  GradedMatrix L = lift_matrix(A, fp2, true);
  CHECK(L.entry(0, 0) == fp2.total->parse("x"));

  // unit entries refuse to lift
  GradedMatrix U({Sx, {0}}, {Sx, {0}});
  U.set_entry(0, 0, Sx->parse("1"));
  CHECK_THROWS_AS(lift_matrix(U, fp2, true), EngineError);
}

TEST_CASE("moore resolution matches the direct engine and the block shape") {
  auto S = make_ring(101, {"x", "y"}, {});
  auto T = make_ring(101, {"z"}, {});
  auto fp = fiber_product(S, T);
  auto M = residue_field_presentation(S);
  auto moore = moore_resolution(M, fp, 6);

  // G_0 = P_0 and rank G_1 = e1 + e2
  CHECK(moore.rank(0) == 1);
  CHECK(moore.rank(1) == 3);
  int fib[7] = {1, 3, 5, 8, 13, 21, 34};
  for (int n = 0; n <= 6; ++n) CHECK(moore.rank(n) == fib[n]);

  for (int n = 1; n <= 6; ++n) {
    CHECK(moore.audit_block_shape(n).empty());
    CHECK(moore.diffs[n - 1].entries_in_m());
  }
  std::vector<const GradedMatrix*> ptrs;
  for (auto& d : moore.diffs) ptrs.push_back(&d);
  CHECK(verify_exactness(ptrs, 8).exact());

  // ranks agree with the direct minimal resolution over R
  ModulePresentation MR = view_left_module_over_total(M, fp);
  Resolution direct = Resolution::of_module(MR, 6);
  for (int n = 0; n <= 6; ++n) CHECK(moore.rank(n) == direct.betti(n));

  // the Theorem-3.5 focus block at even n: the word (0, [(1,1)^(n/2)], 0)
  // carries dE_1 tensor identity, a literal x/y-column block
  MooreWord w;
  w.a = 0;
  w.b = 0;
  w.pairs.assign(3, {1, 1});
  int wi = moore.find_word(6, w);
  REQUIRE(wi >= 0);
  const auto& blocks = moore.blocks[5];
  bool located = false;
  for (const auto& b : blocks)
    if (b.src_word == wi) {
      CHECK(b.kind == 'E');
      CHECK(b.which == 1);
      CHECK(b.copies > 0);
      located = true;
    }
  CHECK(located);
}

TEST_CASE("theorem verifier over fiber products") {
  auto S = make_ring(101, {"x", "y"}, {});
  auto T = make_ring(101, {"z"}, {});
  auto fp = fiber_product(S, T);
  ModulePresentation M = residue_field_presentation(fp.total);
  auto rep = verify_theorem_fp(fp, M, 2, 9);
  CHECK(rep.all_pass);
  CHECK(rep.per_r[0].bound == 9);
  CHECK(rep.per_r[1].bound == 10);
  CHECK(rep.per_r[0].onset == 1);
  CHECK(rep.per_r[1].onset == 2);

  // embdim 2 violates the hypothesis
  auto Sx = make_ring(101, {"x"}, {});
  auto Ty = make_ring(101, {"y"}, {});
  auto fp2 = fiber_product(Sx, Ty);
  ModulePresentation M2 = cyclic_presentation(fp2.total, {fp2.total->parse("x")});
  CHECK_THROWS_AS(verify_theorem_fp(fp2, M2, 1, 6), EngineError);
  auto rep2 = verify_theorem_fp(fp2, M2, 1, 6, true); // observe mode
  CHECK(!rep2.hypothesis_ok);
  CHECK(rep2.per_r[0].onset == -1); // never equal
}
