#include <doctest.h>

#include "localh/errors.hpp"
#include "localh/verify.hpp"

using namespace localh;

TEST_CASE("suite parsing") {
  CHECK(parse_suite("tables") == Suite::Tables);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_THROWS_AS(parse_suite("everything"), std::invalid_argument);
}

TEST_CASE("every check passes at the default budget") {
  const auto results = run_verification({Suite::All, 7});
  CHECK(results.size() >= 20);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.scope.empty());
  }
}

TEST_CASE("suites partition the checks") {
  const auto all = run_verification({Suite::All, 5}).size();
  const auto parts = run_verification({Suite::Tables, 5}).size() + run_verification({Suite::Oracles, 5}).size() +
                     run_verification({Suite::Series, 5}).size();
  CHECK(all == parts);
}

TEST_CASE("full budget") {
  for (const auto& r : run_verification({Suite::All, kMaxVerifyN})) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("budget limits") {
  CHECK_THROWS_AS(run_verification({Suite::All, kMaxVerifyN + 1}), BudgetExceeded);
  CHECK_THROWS_AS(run_verification({Suite::All, 0}), std::invalid_argument);
  for (const auto& r : run_verification({Suite::All, 1})) CHECK(r.passed);
}
