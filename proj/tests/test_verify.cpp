#include <doctest.h>

#include <algorithm>

#include "howe/errors.hpp"
#include "howe/parallel.hpp"
#include "howe/verify.hpp"

using namespace howe;

TEST_CASE("suite names") {
  const auto names = suite_names();
  for (const char* s : {"residues", "limit", "weyl", "metaplectic", "multiplicativity", "hecht", "orbit",
                        "vandermonde", "semigroup", "all"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
  CHECK_THROWS_AS(run_verify({"nope", 0, 1, {}}), PreconditionError);
}

TEST_CASE("suites pass and are deterministic") {
  for (const char* s : {"residues", "limit", "hecht", "orbit", "vandermonde", "semigroup"}) {
    const auto a = run_verify({s, 0, 7, {}});
    REQUIRE(a.size() == 1);
    CHECK(a[0].pass);
    set_thread_count(4);
    const auto b = run_verify({s, 0, 7, {}});
    set_thread_count(1);
    CHECK(a[0].maxError == b[0].maxError);
    CHECK(a[0].notes == b[0].notes);
  }
}

TEST_CASE("case counts and weight restriction") {
  const auto r = run_verify({"residues", 25, 3, {}});
  CHECK(r[0].cases == 25);
  const auto h = run_verify({"hecht", 0, 1, 2});
  CHECK(h[0].pass);
  REQUIRE(h[0].constant.has_value());
  CHECK(std::abs(*h[0].constant - 1.0) < 1e-10);
}
