#include "doctest.h"
#include "sic/error.hpp"
#include "sic/suites.hpp"

using namespace sic;

TEST_SUITE("suites") {
  TEST_CASE("reports repeat byte for byte") {
    for (const auto& name : {"theorem37", "mwis", "witness-battery"}) {
      SuiteOptions o;
      o.seed = 5;
      CHECK(run_suite(name, o).text() == run_suite(name, o).text());
    }
  }

  TEST_CASE("thread count does not change a report") {
    SuiteOptions one, four;
    one.seed = four.seed = 9;
    four.threads = 4;
    for (const auto& name : {"theorem31", "mwis"}) CHECK(run_suite(name, one).text() == run_suite(name, four).text());
  }

  TEST_CASE("seeds change the instances") {
    SuiteOptions a, b;
    a.seed = 1;
    b.seed = 2;
    CHECK(run_suite("theorem31", a).text() != run_suite("theorem31", b).text());
  }

  TEST_CASE("report layout") {
    SuiteReport r{"x", {{"a", true, "d=1"}, {"b", false, ""}}, {"n"}};
    CHECK_FALSE(r.pass());
    CHECK(r.text() == "suite x\ncheck a pass d=1\ncheck b FAIL\nnote n\nRESULT suite=x pass=false\n");
    CHECK_THROWS_AS(run_suite("nope", {}), PreconditionError);
    CHECK(suite_names().size() == 9);
  }
}
