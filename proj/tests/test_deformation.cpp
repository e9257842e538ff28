#include <doctest.h>

#include "fitres/deformation.hpp"
#include "fitres/stretched.hpp"

using namespace fitres;

TEST_CASE("adjoining a variable") {
  auto base = make_ring(101, {"x", "y"}, {"x*y"});
  auto pair = adjoin_variable(base, "w");
  CHECK(pair.total->describe() == "k[x,y,w]/(x*y)");
  // H_total(d) = sum_{i<=d} H_base(i)
  for (int d = 0; d <= 5; ++d) {
    int want = 0;
    for (int i = 0; i <= d; ++i) want += base->hilbert(i);
    CHECK(pair.total->hilbert(d) == want);
  }
  CHECK_THROWS_AS(adjoin_variable(base, "x"), EngineError); // NameClash

  // base = k gives a polynomial ring in one variable
  auto k0 = make_ring(101, {"t"}, {"t^2"});
  auto sg = build_stretched(101, 3, 2, {1, 1});
  auto pair2 = adjoin_variable(sg.ring, "w");
  for (int d = 0; d <= 4; ++d) {
    int want = 0;
    for (int i = 0; i <= d; ++i) want += sg.ring->hilbert(i);
    CHECK(pair2.total->hilbert(d) == want);
  }
  (void)k0;
}

TEST_CASE("declared pairs and the division homotopy") {
  SUBCASE("degenerate: relations do not involve w, sigma = 0") {
    auto base = make_ring(101, {"x"}, {"x^3"});
    auto pair = adjoin_variable(base, "w");
    Resolution Fp = Resolution::of_module(residue_field_presentation(base), 6);
    auto ld = lift_and_divide(Fp, pair);
    CHECK(ld.sigma_zero);
    CHECK(ld.sigma_chain_map);
    // G is the mapping cone of multiplication by w: betti convolved with (1,1)
    auto G = shamash_converse(Fp, pair);
    for (int n = 1; n <= G.length(); ++n)
      CHECK(G.rank(n) == Fp.betti(n) + Fp.betti(n - 1));
  }
  SUBCASE("entangled relations: sigma = [w] on k[x,w]/(x^2 - w^2)") {
    auto total = make_ring(101, {"x", "w"}, {"x^2 - w^2"});
    auto pair = declare_deformation(total, "w");
    CHECK(pair.base->describe() == "k[x]/(x^2)");
    Resolution Fp = Resolution::of_module(residue_field_presentation(pair.base), 5);
    auto ld = lift_and_divide(Fp, pair);
    CHECK(!ld.sigma_zero);
    CHECK(ld.sigma_chain_map);
    REQUIRE(!ld.sigma.empty());
    CHECK(ld.sigma[0].entry(0, 0) == total->parse("w"));
    auto G = shamash_converse(Fp, pair);
    // the assembled complex is exact and minimal (checked in the builder);
    // it resolves k over the hypersurface with betti (1, 2, 2, ...)
    CHECK(G.rank(0) == 1);
    for (int n = 1; n <= G.length(); ++n) CHECK(G.rank(n) == 2);
    std::vector<const GradedMatrix*> ptrs;
    for (auto& d : G.diffs) ptrs.push_back(&d);
    CHECK(verify_exactness(ptrs, 8).exact());
  }
  SUBCASE("trivial lift over k[w]: 0 -> R -> R resolves k") {
    auto base = make_ring(101, {"t"}, {"t^2"});
    // base = k realized as t-free module: use the one-variable polynomial
    // ring instead: R' = k is not presentable here, so resolve k over k[w]
    auto kw = make_ring(101, {"w"}, {});
    Resolution res = Resolution::of_module(residue_field_presentation(kw), 3);
    CHECK(res.finite());
    CHECK(res.betti(0) == 1);
    CHECK(res.betti(1) == 1);
    CHECK(res.betti(2) == 0);
    (void)base;
  }
}

TEST_CASE("shamash converse agrees with the direct resolution") {
  auto base = make_ring(101, {"x", "y"}, {"x*y"});
  auto pair = adjoin_variable(base, "w");
  ModulePresentation M = cyclic_presentation(base, {base->parse("x")});
  Resolution Fp = Resolution::of_module(M, 6);
  auto G = shamash_converse(Fp, pair);
  // F' has betti (1, 1, 1, ...): G ranks (1, 2, 2, 2, ...)
  CHECK(G.rank(0) == 1);
  for (int n = 1; n <= 6; ++n) CHECK(G.rank(n) == 2);

  ModulePresentation MR = view_base_module_over_total(M, pair);
  Resolution direct = Resolution::of_module(MR, 6);
  for (int n = 0; n <= 6; ++n) CHECK(direct.betti(n) == G.rank(n));
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= 2; ++r) {
      MinorVerdict a = minors_vs_mr(G.diffs[n - 1], n, r, true, true);
      MinorVerdict b = minors_of_resolution(direct, n, r);
      CHECK(a.rel == b.rel);
    }
}

TEST_CASE("lift theorem verifier with measured onsets") {
  auto sg = build_stretched(101, 3, 2, {1, 1});
  auto pair = adjoin_variable(sg.ring, "w");
  auto rep = verify_theorem_lift(pair, residue_field_presentation(sg.ring), 2, 7);
  CHECK(!rep.inconclusive);
  CHECK(rep.pass);
  CHECK(rep.ell[0] == 1);
  CHECK(rep.ell[1] == 2);
  CHECK(rep.big_n == 1);
  CHECK(rep.start == 2);
  CHECK(rep.shortcut_applies); // m_base^2 = (x1^2) != 0
  CHECK(rep.shortcut_start == 2);
  for (int n = rep.start; n <= static_cast<int>(rep.total_verdicts.size()); ++n)
    CHECK(rep.total_verdicts[n - 1].rel == MinorRel::Equal);

  // vacuous-hypothesis case: r with m_base^r = 0 over a short base
  auto hyp = make_ring(101, {"x"}, {"x^2"});
  auto pair2 = adjoin_variable(hyp, "w");
  auto rep2 = verify_theorem_lift(pair2, residue_field_presentation(hyp), 2, 6);
  // beta'_n = 1 forever, so beta >= 2 never holds: inconclusive, not false
  CHECK(rep2.inconclusive);
}
