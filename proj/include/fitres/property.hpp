#ifndef FITRES_PROPERTY_HPP
#define FITRES_PROPERTY_HPP

#include <cstdint>

#include "fitres/minors.hpp"

namespace fitres {

struct PropertyResult {
  std::string name;
  int cases_run = 0;
  bool passed = true;
  std::string counterexample; // shrunk reproducer, empty when passed
};

struct PropertySuiteReport {
  uint64_t seed = 0;
  int size = 0;
  int cases = 0;
  std::vector<PropertyResult> results;
  bool all_pass = true;

  std::string to_text() const;
};

// Randomized invariant suites over a pool of small rings: arithmetic axioms,
// normal-form idempotence, socle annihilation, minors-in-m^r, the tensor
// submatrix product law, summand minor inclusion, basis independence of
// Betti numbers and minor ideals, Laplace-vs-permutation determinants, and
// minimalize cokernel preservation. Counterexamples are shrunk by dropping
// rows/columns/terms and printed as reproducer blocks.
PropertySuiteReport run_property_suite(uint64_t seed, int size, int cases);

} // namespace fitres

#endif
