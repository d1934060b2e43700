#pragma once

#include <string>
#include <vector>

#include "walg/pva.hpp"

namespace walg {

struct SuiteInfo {
  std::string name;
  std::string description;
  bool needs_osp = false;
};

const std::vector<SuiteInfo>& suites();

// One line per check group: "PASS ..." / "FAIL ..." plus the failures.
struct SuiteResult {
  std::string suite;
  std::vector<std::pair<std::string, Report>> groups;
  bool ok() const;
};

// Throws InputError for an unknown suite or a suite that does not apply to g.
SuiteResult run_suite(const LieSuperalgebra& g, const std::string& suite, unsigned seed = 1);

// Leibniz rule and sesquilinearity on random polynomials (degree ≤ 3) against the master formula.
Report check_leibniz(const BracketTable& t, unsigned seed, int rounds = 8);

}  // namespace walg
