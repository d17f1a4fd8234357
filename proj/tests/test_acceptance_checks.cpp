#include <doctest.h>

#include <stdexcept>

#include "algflow/acceptance.hpp"

using namespace algflow::acceptance;

TEST_CASE("every check is registered once") {
  const auto names = check_names();
  CHECK(names.size() == 9);
  for (const auto& n : names) {
    const auto r = run_check(n);
    CHECK_MESSAGE(r.passed, n << ": " << r.detail);
    CHECK(r.name == n);
  }
  CHECK_THROWS_AS(run_check("nope"), std::invalid_argument);
}

TEST_CASE("filtering") {
  const auto only = run_checks({"kce"});
  REQUIRE(only.size() == 1);
  CHECK(only[0].name == "kce");
}

TEST_CASE("an unattainable tolerance fails the KCE check") {
  Options opts;
  opts.tol_override = 1e-20;
  CHECK_FALSE(run_check("kce", opts).passed);
}
