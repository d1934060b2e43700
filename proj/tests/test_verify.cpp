#include <doctest.h>

#include "walg/algebra_io.hpp"
#include "walg/verify.hpp"

using namespace walg;

TEST_CASE("every applicable verification suite passes on the catalog") {
  for (auto& e : catalog()) {
    LieSuperalgebra g = load_algebra(e.name);
    for (auto& s : suites()) {
      if (s.needs_osp && !g.osp) {
        CHECK_THROWS_AS(run_suite(g, s.name, 1), InputError);
        continue;
      }
      SuiteResult r = run_suite(g, s.name, 7);
      for (auto& [n, rep] : r.groups) {
        INFO(e.name << " / " << s.name << " / " << n);
        CHECK(rep.checked > 0);
        for (auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok());
      }
    }
  }
}

TEST_CASE("unknown suite is an input error") {
  CHECK_THROWS_AS(run_suite(load_algebra("sl2"), "nope", 1), InputError);
}
