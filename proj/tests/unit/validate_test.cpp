#include <doctest.h>

#include "ntpack/errors.hpp"
#include "ntpack/validate.hpp"

#include <iostream>

using namespace ntpack;

namespace {

void print_failures(const ValidationReport& r) {
  for (const auto& c : r.checks)
    for (const auto& w : c.witnesses) MESSAGE(c.name << ": " << w);
}

}  // namespace

TEST_CASE("extreme rays and sampling") {
  auto rays = extreme_rays_2d(Cone::orthant(2));
  REQUIRE(rays.has_value());
  CHECK(rays->first == make_vector({1, 0}));
  CHECK(rays->second == make_vector({0, 1}));
  auto slice = extreme_rays_2d(Cone::orthant(2).restricted(RatMatrix{{-1, 1}}));
  REQUIRE(slice.has_value());
  CHECK(slice->first == make_vector({1, 1}));
  CHECK_FALSE(extreme_rays_2d(Cone{2, RatMatrix{{1, 0}}, RatMatrix(0, 2)}).has_value());

  auto pts = sample_cone(Cone::orthant(2), 50, 1, true);
  CHECK(pts.size() == 50);
  for (const auto& p : pts) CHECK(cone_contains_interior(Cone::orthant(2), p));

  Cone c3 = Cone::orthant(3);
  auto pts3 = sample_cone(c3, 20, 2);
  CHECK(pts3.size() == 20);
  for (const auto& p : pts3) CHECK(cone_contains(c3, p));
}

TEST_CASE("built-in ledgers pass every check") {
  Ledger b3 = builtin_b3();
  auto r = validate_ledger(b3, {parse_relator(b3, "s1 s2 s1=s2 s1 s2")});
  print_failures(r);
  CHECK(r.passed());
  REQUIRE(r.checks.size() == 5);
  for (const auto& c : r.checks) CHECK(c.cases > 0);

  Ledger yd = builtin_ydelta();
  auto y = validate_ledger(yd, {parse_relator(yd, "a a'="), parse_relator(yd, "b' b=")});
  print_failures(y);
  CHECK(y.passed());
}

TEST_CASE("a wrong relator is reported") {
  Ledger b3 = builtin_b3();
  auto r = validate_ledger(b3, {parse_relator(b3, "s1 s2=s2 s1")});
  CHECK_FALSE(r.checks[4].passed);
  CHECK_FALSE(r.checks[4].witnesses.empty());
  CHECK(r.checks[0].passed);
  CHECK_THROWS_AS(parse_relator(b3, "s1 s2"), WordParseError);
}

TEST_CASE("a corrupted matrix entry is caught with a witness") {
  Ledger b3 = builtin_b3();
  b3.pieces[6].matrix(0, 0) += 1;
  auto r = validate_ledger(b3, {});
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.checks[3].passed);
  CHECK_FALSE(r.checks[3].witnesses.empty());
}

TEST_CASE("the stated ydelta gluing orientation fails agreement") {
  Ledger yd = builtin_ydelta();
  for (auto& g : yd.gluings) g.map = RatMatrix{{0, 0}, {1, 0}};
  auto r = validate_ledger(yd, {});
  CHECK_FALSE(r.checks[2].passed);
}

TEST_CASE("missing piece fails coverage") {
  Ledger yd = builtin_ydelta();
  yd.pieces.erase(yd.pieces.begin() + 1);
  auto r = validate_ledger(yd, {});
  CHECK_FALSE(r.checks[1].passed);
}
