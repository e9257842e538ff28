// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (every comparison is exact equality of ideals or integers).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fitres/deformation.hpp"
#include "fitres/fiber_product.hpp"
#include "fitres/property.hpp"
#include "fitres/stretched.hpp"

using namespace fitres;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d: %s — %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL",
              name.c_str(), secs, err.empty() ? "" : " error: ", err.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool ideal_equals(const GradedIdeal& a, const GradedIdeal& b) {
  int cap = std::max(a.max_generator_degree(), b.max_generator_degree());
  return ideal_compare(a, b, cap).rel == IdealRel::Equal;
}

// alternating single-generator verdicts over a range
bool alternates(const Resolution& res, const RingPtr& R, const GradedIdeal& odd,
                const GradedIdeal& even, int n_to, bool need_certified) {
  for (int n = 1; n <= n_to; ++n) {
    MinorVerdict v = minors_of_resolution(res, n, 1);
    if (need_certified && !v.certified) return false;
    if (!v.ideal_exact) return false;
    if (!ideal_equals(v.ideal(R), n % 2 ? odd : even)) return false;
  }
  return true;
}

} // namespace

int main() {
  // 1. over k[x]/(x^3), M = k: I(n,1) = (x) odd / (x^2) even, 1 <= n <= 12
  criterion(1, "alternating minors over k[x]/(x^3)", [] {
    auto R = make_ring(101, {"x"}, {"x^3"});
    Resolution res = Resolution::of_module(residue_field_presentation(R), 12);
    return alternates(res, R, GradedIdeal(R, {R->parse("x")}),
                      GradedIdeal(R, {R->parse("x^2")}), 12, true);
  });

  // 2. over k[x1,x2]/(x1x2, x1^2 - x2^2), M = (x1): I(n,1) alternates between
  // (x1) and (x2), 1 <= n <= 12 (the engine's phase puts (x2) at odd n)
  criterion(2, "alternating minors over the e=2 stretched Gorenstein ring", [] {
    auto sg = build_stretched(101, 2, 2, {1});
    auto R = sg.ring;
    GradedMatrix C({R, {1}}, {R, {0}});
    C.set_entry(0, 0, R->parse("x1"));
    Resolution res = Resolution::of_image(C, 12);
    GradedIdeal i1(R, {R->parse("x1")}), i2(R, {R->parse("x2")});
    for (int n = 1; n <= 12; ++n) {
      MinorVerdict v = minors_of_resolution(res, n, 1);
      if (!v.certified || !v.ideal_exact) return false;
      GradedIdeal got = v.ideal(R);
      if (!ideal_equals(got, n % 2 ? i2 : i1)) return false;
    }
    return true;
  });

  // 3. over k[x,y]/(xy), M = R/(x): I(n,1) alternates (x)/(y), 1 <= n <= 12
  criterion(3, "alternating minors over the embdim-2 fiber product", [] {
    auto S = make_ring(101, {"x"}, {});
    auto T = make_ring(101, {"y"}, {});
    auto fp = fiber_product(S, T);
    auto R = fp.total;
    Resolution res =
        Resolution::of_module(cyclic_presentation(R, {R->parse("x")}), 12);
    return alternates(res, R, GradedIdeal(R, {R->parse("x")}),
                      GradedIdeal(R, {R->parse("y")}), 12, false);
  });

  // 4. R = k[x,y,z]/(xz,yz), M = k, r in {1,2}: equality certified from onset
  // through n = 9 (r=1) and n = 10 (r=2)
  criterion(4, "Theorem-3.5 range over the embdim-3 fiber product", [] {
    auto S = make_ring(101, {"x", "y"}, {});
    auto T = make_ring(101, {"z"}, {});
    auto fp = fiber_product(S, T);
    auto rep = verify_theorem_fp(fp, residue_field_presentation(fp.total), 2, 10);
    if (!rep.all_pass) return false;
    for (const auto& tr : rep.per_r) {
      if (tr.onset < 1 || tr.bound > 10 + (tr.r == 1 ? 1 : 0)) {
        if (tr.r == 1 && tr.bound != 9) return false;
        if (tr.r == 2 && tr.bound != 10) return false;
      }
      for (int n = tr.onset; n <= static_cast<int>(tr.verdicts.size()); ++n) {
        if (tr.verdicts[n - 1].rel != MinorRel::Equal) return false;
        if (!tr.verdicts[n - 1].certified) return false;
      }
      if (tr.r == 1 && tr.bound != 9) return false;
      if (tr.r == 2 && tr.bound != 10) return false;
    }
    return true;
  });

  // 5. e=3, s=2 stretched Gorenstein, M in {k, R/(x2)}, r in {1,2}: equality
  // certified from onset through n = 10
  auto sg = build_stretched(101, 3, 2, {1, 1});
  criterion(5, "Theorem-4.8 range over the e=3 stretched Gorenstein ring", [&] {
    for (int which = 0; which < 2; ++which) {
      ModulePresentation M =
          which == 0 ? residue_field_presentation(sg.ring)
                     : cyclic_presentation(sg.ring, {sg.ring->parse("x2")});
      auto rep = verify_theorem_sg(sg, M, 2, 10);
      if (!rep.all_pass) return false;
      for (const auto& tr : rep.per_r) {
        if (tr.onset < 1) return false;
        for (int n = tr.onset; n <= static_cast<int>(tr.verdicts.size()); ++n) {
          if (tr.verdicts[n - 1].rel != MinorRel::Equal) return false;
          if (!tr.verdicts[n - 1].certified) return false;
        }
      }
    }
    return true;
  });

  // 6. on the criterion-5 resolutions: beta_{n+1} >= 2 beta_n for n >= mu(M)
  criterion(6, "Betti growth factor 2e-l+h-1 = 2 on criterion-5 runs", [&] {
    for (int which = 0; which < 2; ++which) {
      ModulePresentation M =
          which == 0 ? residue_field_presentation(sg.ring)
                     : cyclic_presentation(sg.ring, {sg.ring->parse("x2")});
      Resolution res = Resolution::of_module(M, 10);
      auto rep = betti_growth_check(res);
      if (rep.factor != 2 || !rep.all_hold) return false;
      for (int n = rep.mu; n < 10; ++n)
        if (res.betti(n + 1) < 2 * res.betti(n)) return false;
    }
    return true;
  });

  // 7. spliced complexes for n in {2,3,4,5}: exact, minimal, I(n,1) = soc = (x1^2) != m
  criterion(7, "Example-4.10 socle witnesses, no uniform bound", [&] {
    GradedIdeal soc = socle(sg.ring);
    GradedIdeal x1sq(sg.ring, {sg.ring->parse("x1^2")});
    if (!ideal_equals(soc, x1sq)) return false;
    for (int n = 2; n <= 5; ++n) {
      auto rep = socle_witness(sg.ring, n);
      if (!rep.pass || !rep.exact || !rep.minimal) return false;
      if (!rep.equals_socle || !rep.differs_from_m) return false;
    }
    return true;
  });

  // 8. G(F') for R' in {e=3 stretched, k[x,y]/(xy)}, M in {k, R'/(x)}:
  // squares to zero, minimal, exact, rank formula, agreement with the direct
  // resolution in betti numbers and minor ideals through n = 8
  criterion(8, "Construction 5.1 + Lemma 5.2 against the direct resolution", [&] {
    auto xy = make_ring(101, {"x", "y"}, {"x*y"});
    struct Case {
      RingPtr base;
      const char* cyc;
    };
    Case cases[4] = {{sg.ring, nullptr},
                     {sg.ring, "x1"},
                     {xy, nullptr},
                     {xy, "x"}};
    for (const auto& c : cases) {
      auto pair = adjoin_variable(c.base, "w");
      ModulePresentation M = c.cyc == nullptr
                                 ? residue_field_presentation(c.base)
                                 : cyclic_presentation(c.base, {c.base->parse(c.cyc)});
      Resolution Fp = Resolution::of_module(M, 8);
      auto G = shamash_converse(Fp, pair); // asserts d o d = 0 and minimality
      for (int n = 1; n <= 8; ++n)
        if (G.rank(n) != Fp.betti(n) + Fp.betti(n - 1)) return false;
      std::vector<const GradedMatrix*> ptrs;
      for (auto& d : G.diffs) ptrs.push_back(&d);
      int cap = 0;
      for (const auto& Fm : G.frees) cap = std::max(cap, Fm.max_degree());
      if (!verify_exactness(ptrs, cap + 2).exact()) return false;
      ModulePresentation MR = view_base_module_over_total(M, pair);
      Resolution direct = Resolution::of_module(MR, 8);
      for (int n = 0; n <= 8; ++n)
        if (direct.betti(n) != G.rank(n)) return false;
      for (int n = 1; n <= 8; ++n)
        for (int r = 1; r <= 2; ++r) {
          MinorVerdict a = minors_vs_mr(G.diffs[n - 1], n, r, true, true);
          MinorVerdict b = minors_of_resolution(direct, n, r);
          if (a.rel != b.rel) return false;
          if (a.rel != MinorRel::Equal && a.ideal_exact && b.ideal_exact) {
            if (!ideal_equals(a.ideal(pair.total), b.ideal(pair.total))) return false;
          }
        }
    }
    return true;
  });

  // 9. lifted theorem over R = R'[w] for R' in {e=3 stretched, embdim-3 fiber
  // product}, M = k, r in {1,2}: equality for all computed n >= max(ell, N)
  criterion(9, "Theorem 5.3 / Corollaries 5.7-5.8 through n = 8", [&] {
    std::vector<RingPtr> bases;
    bases.push_back(sg.ring);
    auto S = make_ring(101, {"x", "y"}, {});
    auto T = make_ring(101, {"z"}, {});
    bases.push_back(fiber_product(S, T).total);
    for (const auto& base : bases) {
      auto pair = adjoin_variable(base, "w");
      for (int r = 1; r <= 2; ++r) {
        auto rep = verify_theorem_lift(pair, residue_field_presentation(base), r, 8);
        if (rep.inconclusive || !rep.pass) return false;
        for (int n = rep.start; n <= static_cast<int>(rep.total_verdicts.size()); ++n)
          if (rep.total_verdicts[n - 1].rel != MinorRel::Equal) return false;
      }
    }
    return true;
  });

  // 10. randomized suites at >= 200 cases, sizes <= 4, entries of degree <= 2
  criterion(10, "Section-2 property suites, 250 cases each", [] {
    auto rep = run_property_suite(1, 4, 250);
    const char* required[] = {"minors/in-mr", "minors/tensor-law", "minors/summand",
                              "minors/basis-independence"};
    for (const char* name : required) {
      bool found = false;
      for (const auto& r : rep.results)
        if (r.name == name) {
          found = true;
          if (!r.passed || r.cases_run < 200) return false;
        }
      if (!found) return false;
    }
    return rep.all_pass;
  });

  // 11. the lifted Koszul complex over k[x,y,z]/(xz,yz) has nonzero homology
  // at position 1 in some degree <= 4
  criterion(11, "Example-3.2 negative control", [] {
    auto S = make_ring(101, {"x", "y"}, {});
    auto T = make_ring(101, {"z"}, {});
    auto fp = fiber_product(S, T);
    Resolution resS = Resolution::of_module(residue_field_presentation(S), 3);
    auto lifted = lift_resolution_complex(resS, fp, true);
    std::vector<const GradedMatrix*> ptrs;
    for (auto& d : lifted) ptrs.push_back(&d);
    auto rep = verify_exactness(ptrs, 4);
    if (!rep.is_complex) return false;
    for (const auto& h : rep.homology)
      if (h.position == 1 && h.degree <= 4 && h.dim > 0) return true;
    return false;
  });

  std::printf("%s: %d of 11 criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
              11 - failures);
  return failures == 0 ? 0 : 1;
}
