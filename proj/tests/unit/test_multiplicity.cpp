#include <random>

#include "doctest.h"
#include "hesselink/multiplicity.hpp"
#include "oracles.hpp"

using namespace hesselink;

namespace {

ProjectivePoint point(const std::vector<long>& entries) {
  RatVec v;
  for (long e : entries) v.push_back(Rational(e));
  return ProjectivePoint(std::move(v));
}

}  // namespace

TEST_SUITE("multiplicity") {

TEST_CASE("multiplicity at distinguished points of the cuspidal cubic") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);

  MultiplicityReport at_cusp = multiplicity_at(cusp, point({0, 0, 1}));
  CHECK(at_cusp.value == 2);
  CHECK(serialize_polynomial(at_cusp.moved) == "-x2^3 + x0*x1^2");

  // off the curve
  CHECK(multiplicity_at(cusp, point({1, 0, 0})).value == 0);
  // smooth point of the curve
  CHECK(multiplicity_at(cusp, point({1, 1, 1})).value == 1);
  CHECK(multiplicity_at(cusp, point({0, 1, 0})).value == 1);

  CHECK_THROWS_AS(multiplicity_at(cusp, ProjectivePoint({Rational(1),
                                                         Rational(0)})),
                  std::invalid_argument);
}

TEST_CASE("multiplicity agrees with the vanishing-derivatives oracle") {
  std::mt19937_64 rng(1618);
  int trials = 0;
  while (trials < 30) {
    auto f = oracle::random_sparse_polynomial(rng, 3, 5);
    ++trials;
    for (int i = 0; i <= f.r(); ++i) {
      ProjectivePoint p = ProjectivePoint::coordinate_point(f.r(), i);
      int n = multiplicity_at(f, p).value;
      CAPTURE(serialize_polynomial(f));
      CAPTURE(i);
      CHECK((n >= 1) == (f.evaluate(p.coords()) == 0));
      CHECK((n >= 2) == oracle::singular_at(f, p.coords()));
    }
  }
}

TEST_CASE("worst multiplicity scans coordinate points then extras") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  MultiplicityReport worst = max_multiplicity(cusp);
  CHECK(worst.value == 2);
  CHECK(worst.point == point({0, 0, 1}));

  // ties resolve to the earliest candidate
  auto squares = parse_polynomial("x0^2*x1^2", 1);
  CHECK(max_multiplicity(squares).point == point({1, 0}));
  CHECK(max_multiplicity(squares).value == 2);

  // an extra candidate can expose a worse point
  auto triple = parse_polynomial("x0^3 + 3*x0^2*x1 + 3*x0*x1^2 + x1^3", 1);
  CHECK(max_multiplicity(triple).value == 0);
  MultiplicityReport aided = max_multiplicity(triple, {point({1, -1})});
  CHECK(aided.value == 3);
  CHECK(aided.point == point({1, -1}));
}

TEST_CASE("the leading x0-exponent witnesses multiplicity after any move") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  CHECK(check_leading_exponent(multiplicity_at(cusp, point({0, 0, 1})).moved));
  CHECK(check_leading_exponent(multiplicity_at(cusp, point({1, 1, 1})).moved));

  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = oracle::random_sparse_polynomial(rng, 3, 5);
    for (int i = 0; i <= f.r(); ++i) {
      ProjectivePoint p = ProjectivePoint::coordinate_point(f.r(), i);
      CHECK(check_leading_exponent(multiplicity_at(f, p).moved));
    }
  }
}

TEST_CASE("two-sided multiplicity bounds from a certified label") {
  SUBCASE("pinching to equality on a maximally unstable quartic") {
    auto f = parse_polynomial("x0^4", 3);
    ClassificationResult res = classify(f, {.budget = 4, .seed = 1});
    REQUIRE(res.unstable());
    BoundsReport b = hesselink_bounds(*res.label, 4, 3);
    CHECK(b.lower == 4);
    CHECK(b.upper == 4);
    CHECK(b.contains(max_multiplicity(f).value));
    CHECK_FALSE(b.contains(3));
    CHECK_FALSE(b.contains(5));
  }

  SUBCASE("sharp for a doubled pair of lines") {
    auto f = parse_polynomial("x1^2*x2^2", 2);
    ClassificationResult res = classify(f, {.budget = 4, .seed = 1});
    REQUIRE(res.unstable());
    CHECK(res.label->lambda_class ==
          OneParamSubgroup({Integer(1), Integer(1), Integer(-2)}));
    BoundsReport b = hesselink_bounds(*res.label, 4, 2);
    CHECK(b.lower == 4);
    CHECK(b.upper == 4);
    CHECK(max_multiplicity(f).value == 4);
  }

  SUBCASE("strict window for the cuspidal cubic") {
    auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
    ClassificationResult res = classify(cusp, {.budget = 4, .seed = 1});
    REQUIRE(res.unstable());
    BoundsReport b = hesselink_bounds(*res.label, 3, 2);
    CHECK(b.lower == 2);
    CHECK(b.upper == parse_rational("33/14"));
    CHECK(b.min_weight == -5);
    CHECK(b.max_weight == 4);
    CHECK(b.contains(2));
    CHECK_FALSE(b.contains(3));
  }

  SUBCASE("degenerate weight spreads are rejected") {
    StratumLabel label{OneParamSubgroup({Integer(1), Integer(1)}),
                       Rational(1), Integer(2),
                       OneParamSubgroup({Integer(1), Integer(1)}),
                       GroupElement::identity(2)};
    CHECK_THROWS_AS(hesselink_bounds(label, 2, 1), std::invalid_argument);
  }
}

TEST_CASE("instability implies a singular point in high degree") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  ClassificationResult res = classify(cusp, {.budget = 4, .seed = 1});
  REQUIRE(res.unstable());
  SingularityCheck check = check_singular_if_unstable(*res.label, 3, 2);
  CHECK(check.applicable);
  CHECK(check.lower == 2);
  CHECK(check.threshold == 1);
  CHECK(check.implies_singular);
  // and the predicted singular point really is singular
  MultiplicityReport worst = max_multiplicity(cusp);
  CHECK(worst.value >= 2);
  CHECK(oracle::singular_at(cusp, worst.point.coords()));

  // low degree: the implication is out of range, not claimed
  auto conic = parse_polynomial("x0^2", 2);
  ClassificationResult cres = classify(conic, {.budget = 4, .seed = 1});
  REQUIRE(cres.unstable());
  SingularityCheck inapplicable = check_singular_if_unstable(*cres.label, 2, 2);
  CHECK_FALSE(inapplicable.applicable);
  CHECK(inapplicable.threshold == parse_rational("2/3"));

  // boundary degree d = r + 1 on a binary quadric
  auto dbl = parse_polynomial("x0^2", 1);
  ClassificationResult dres = classify(dbl, {.budget = 4, .seed = 1});
  REQUIRE(dres.unstable());
  SingularityCheck edge = check_singular_if_unstable(*dres.label, 2, 1);
  CHECK(edge.applicable);
  CHECK(edge.lower == 2);
  CHECK(edge.threshold == 1);
  CHECK(edge.implies_singular);
}

}  // TEST_SUITE
