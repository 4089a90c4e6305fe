#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

#include "ntpack/algorithms.hpp"
#include "ntpack/validate.hpp"

TEST_CASE("property suites") {
  for (const auto& p : proptest::all_properties()) {
    SUBCASE(p.name.c_str()) {
      auto outcome = proptest::check(p.cases, p.seed, p.body);
      INFO(p.name, ": ", outcome.failure.value_or(""));
      CHECK(!outcome.failure);
      CHECK(outcome.cases == p.cases);
    }
  }
}

TEST_CASE("closed form matches the ladder for every xi up to 100") {
  for (int xi = 1; xi <= 100; ++xi) {
    auto q = ntpack::compute_Q(0, xi + 3);
    CHECK(q.Q == ntpack::q_closed_form(xi));
  }
}

TEST_CASE("rotation ledger is a valid ledger") {
  auto l = proptest::ydelta_with_rotation();
  auto report = ntpack::validate_ledger(l, {ntpack::parse_relator(l, "r r r=")});
  for (const auto& c : report.checks) INFO(c.name);
  CHECK(report.passed());
}

TEST_CASE("rotated conjugate of the running example") {
  auto l = proptest::ydelta_with_rotation();
  auto plain = ntpack::guess_and_check(l, ntpack::parse_word(l, "b' a"), 16);
  auto conj = ntpack::guess_and_check(l, ntpack::parse_word(l, "r b' a r'"), 16);
  CHECK(ntpack::compare(plain.eigen.lambda, conj.eigen.lambda) == 0);
  CHECK(conj.sink.cell != plain.sink.cell);
}
