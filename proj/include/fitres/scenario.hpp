#ifndef FITRES_SCENARIO_HPP
#define FITRES_SCENARIO_HPP

#include <cstdint>
#include <string>

namespace fitres {

// Scenario files: line-oriented blocks of `key value` pairs.
//
//   field 101
//   ring R { vars x, y ; rels x*y }        (newlines work like ';')
//   fiber_product R { left S { vars x, y } right T { vars z } }
//   stretched_gorenstein R { e 3 ; s 2 ; units 1, 1 }
//   deform D { base R ; adjoin w }   or   deform D { total R2 ; x w }
//   module M over R { kind residue_field }
//   task resolve M { n_max 10 }
//   ...
//
// Exit code 0: every task assertion certified true; 2: inconclusive verdicts
// present; 1: a falsified assertion or an error.
struct ScenarioResult {
  int exit_code = 0;
  std::string report;
};

struct ScenarioOptions {
  uint64_t seed = 1;
  int cap_override = 0; // extra degree slack added to every resolution task
  bool structured = false;
};

ScenarioResult run_scenario_text(const std::string& text, const std::string& name,
                                 const ScenarioOptions& opts);
ScenarioResult run_scenario_file(const std::string& path, const ScenarioOptions& opts);

} // namespace fitres

#endif
