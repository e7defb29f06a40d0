#include <random>

#include "doctest.h"
#include "hesselink/errors.hpp"
#include "hesselink/state_polytope.hpp"
#include "oracles.hpp"

using namespace hesselink;

namespace {

RatVec rat(const std::vector<std::string>& entries) {
  RatVec v;
  for (const auto& e : entries) v.push_back(parse_rational(e));
  return v;
}

}  // namespace

TEST_SUITE("state-polytope") {

TEST_CASE("state sets sort, dedupe, and validate the coordinate sum") {
  StateSet s(1, 2, Integer(1),
             {Monomial({0, 2}), Monomial({2, 0}), Monomial({0, 2})});
  REQUIRE(s.points().size() == 2);
  CHECK(s.points()[0] == Monomial({2, 0}));
  CHECK(s.points()[1] == Monomial({0, 2}));
  CHECK(s.center() == rat({"1/1", "1/1"}));

  CHECK_THROWS_AS(StateSet(1, 2, Integer(1), {Monomial({1, 0})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StateSet(1, 2, Integer(1), {}), std::invalid_argument);

  StateSet shifted(1, 3, Integer(2), {Monomial({5, 1})});
  CHECK(shifted.center() == rat({"3/1", "3/1"}));
}

TEST_CASE("the degree-d state is the support") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  StateSet s = state_degree_d(cusp);
  CHECK(s.t() == 3);
  CHECK(s.Q() == 1);
  REQUIRE(s.points().size() == 2);
  CHECK(s.points()[0] == Monomial({3, 0, 0}));
  CHECK(s.points()[1] == Monomial({0, 2, 1}));
}

TEST_CASE("nearest point for the cuspidal cubic") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  PolytopeAnalysis a = nearest_point(state_degree_d(cusp));
  CHECK(a.nearest == rat({"15/14", "9/7", "9/14"}));
  CHECK(a.delta_squared == parse_rational("3/14"));
  CHECK(a.weights == std::vector<Rational>{parse_rational("5/14"),
                                           parse_rational("9/14")});
  REQUIRE(a.lambda.has_value());
  CHECK(*a.lambda == OneParamSubgroup({Integer(1), Integer(4), Integer(-5)}));
  CHECK(a.mu == 3);
  CHECK(a.unstable());
}

TEST_CASE("nearest point for a single-monomial state") {
  auto f = parse_polynomial("x0^4", 3);
  PolytopeAnalysis a = nearest_point(state_degree_d(f));
  CHECK(a.delta_squared == 12);
  REQUIRE(a.lambda.has_value());
  CHECK(*a.lambda ==
        OneParamSubgroup({Integer(3), Integer(-1), Integer(-1), Integer(-1)}));
  CHECK(a.mu == 12);
}

TEST_CASE("nearest point can land on a vertex of the polytope") {
  auto f = parse_polynomial("x0^3 + x0^2*x1", 1);
  PolytopeAnalysis a = nearest_point(state_degree_d(f));
  CHECK(a.nearest == rat({"2/1", "1/1"}));
  CHECK(a.delta_squared == parse_rational("1/2"));
  REQUIRE(a.lambda.has_value());
  CHECK(*a.lambda == OneParamSubgroup({Integer(1), Integer(-1)}));
  CHECK(a.mu == 1);
}

TEST_CASE("semistable states contain their center") {
  auto fermat = parse_polynomial("x0^3 + x1^3 + x2^3", 2);
  PolytopeAnalysis a = nearest_point(state_degree_d(fermat));
  CHECK(a.delta_squared == 0);
  CHECK(a.nearest == a.center);
  CHECK_FALSE(a.lambda.has_value());
  CHECK(a.mu == 0);
  Rational third = parse_rational("1/3");
  CHECK(a.weights == std::vector<Rational>{third, third, third});
  CHECK_FALSE(a.unstable());
}

TEST_CASE("solver matches the exhaustive oracle on random states") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    StateSet state = oracle::random_state(rng);
    PolytopeAnalysis fast = nearest_point(state);

    std::vector<RatVec> pts;
    for (const auto& m : state.points()) {
      RatVec v;
      for (int i = 0; i <= state.r(); ++i) v.push_back(Rational(m[i]));
      pts.push_back(std::move(v));
    }
    auto slow = oracle::brute_force_nearest(pts, state.center());
    CHECK(fast.delta_squared == slow.delta_squared);
    CHECK(fast.nearest == slow.nearest);
  }
}

TEST_CASE("maxmin with the certified direction reproduces the distance") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  StateSet s = state_degree_d(cusp);
  OneParamSubgroup worst({Integer(1), Integer(4), Integer(-5)});
  CHECK(maxmin_delta(s, {worst}) == parse_rational("3/14"));

  // weaker candidates stay below, and adding them never changes the max
  OneParamSubgroup blunt({Integer(1), Integer(1), Integer(-2)});
  CHECK(maxmin_delta(s, {blunt}) < parse_rational("3/14"));
  CHECK(maxmin_delta(s, {blunt, worst}) == parse_rational("3/14"));

  // on a semistable state every direction scores nonpositive
  auto fermat = parse_polynomial("x0^3 + x1^3 + x2^3", 2);
  StateSet fs = state_degree_d(fermat);
  OneParamSubgroup probe({Integer(1), Integer(0), Integer(-1)});
  CHECK(maxmin_delta(fs, {probe}) == parse_rational("-9/2"));
  CHECK_THROWS_AS(maxmin_delta(fs, {}), std::invalid_argument);
}

TEST_CASE("multiplication matrix layout") {
  auto f = parse_polynomial("x0^2", 1);
  MultiplicationMatrix m = multiplication_matrix(f, 1);
  REQUIRE(m.row_monomials.size() == 2);
  REQUIRE(m.col_monomials.size() == 4);
  CHECK(m.entries[0] == rat({"1/1", "0/1", "0/1", "0/1"}));  // x0 * x0^2
  CHECK(m.entries[1] == rat({"0/1", "1/1", "0/1", "0/1"}));  // x1 * x0^2
  CHECK(m.rank() == 2);

  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  MultiplicationMatrix cm = multiplication_matrix(cusp, 1);
  CHECK(cm.rank() == 3);  // multiplication by f is injective
}

TEST_CASE("shifted states for squares of the first variable") {
  auto f = parse_polynomial("x0^2", 1);
  StateSet s1 = state_degree_dD(f, 1);
  CHECK(s1.t() == 3);
  CHECK(s1.Q() == 2);
  REQUIRE(s1.points().size() == 1);
  CHECK(s1.points()[0] == Monomial({5, 1}));

  StateSet s2 = state_degree_dD(f, 2);
  CHECK(s2.t() == 4);
  CHECK(s2.Q() == 3);
  REQUIRE(s2.points().size() == 1);
  CHECK(s2.points()[0] == Monomial({9, 3}));
}

TEST_CASE("shifted state of a semistable binary form stays centered") {
  auto f = parse_polynomial("x0*x1", 1);
  StateSet s = state_degree_dD(f, 1);
  REQUIRE(s.points().size() == 1);
  CHECK(s.points()[0] == Monomial({3, 3}));
  CHECK(nearest_point(s).delta_squared == 0);
}

TEST_CASE("rescaling factor") {
  CHECK(tau_squared(Rational(2), 1, 1) == 8);
  CHECK(tau_squared(Rational(2), 1, 2) == 18);
  CHECK(tau_squared(parse_rational("8/3"), 2, 1) == 24);
  CHECK(tau_squared(parse_rational("3/14"), 2, 1) == parse_rational("27/14"));
  CHECK_THROWS_AS(tau_squared(Rational(1), 0, 1), std::invalid_argument);
}

TEST_CASE("degree shift reports on the verification corpus") {
  struct Row {
    const char* text;
    int r;
    int D;
    const char* base;
    const char* shifted;
  };
  const Row rows[] = {
      {"x0^2", 1, 1, "2/1", "8/1"},
      {"x0^2", 1, 2, "2/1", "18/1"},
      {"x0*x1", 1, 1, "0/1", "0/1"},
      {"x0^2", 2, 1, "8/3", "24/1"},
      {"x0^3", 2, 1, "6/1", "54/1"},
      {"x1*x2^2", 2, 1, "2/1", "18/1"},
  };
  for (const auto& row : rows) {
    CAPTURE(row.text);
    auto f = parse_polynomial(row.text, row.r);
    DegreeShiftReport rep = verify_degree_shift(f, row.D);
    CHECK(rep.passed());
    CHECK(rep.scaling_holds);
    CHECK(rep.class_preserved);
    CHECK(rep.at_d.delta_squared == parse_rational(row.base));
    CHECK(rep.at_dD.delta_squared == parse_rational(row.shifted));
    CHECK(rep.expected_delta_squared == parse_rational(row.shifted));
    CHECK(rep.unstable_at_d == (rep.at_d.delta_squared > 0));
  }
}

TEST_CASE("degree shift for the cuspidal cubic") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  DegreeShiftReport rep = verify_degree_shift(cusp, 1);
  CHECK(rep.passed());
  CHECK(rep.at_d.delta_squared == parse_rational("3/14"));
  CHECK(rep.at_dD.delta_squared == parse_rational("27/14"));
  REQUIRE(rep.at_dD.lambda.has_value());
  CHECK(canonical_class_rep(*rep.at_dD.lambda) ==
        OneParamSubgroup({Integer(4), Integer(1), Integer(-5)}));
}

TEST_CASE("pruning never changes the shifted state") {
  std::vector<std::pair<const char*, int>> corpus = {
      {"x0^2", 1},           {"x0*x1", 1},
      {"x0^2 + x1^2", 1},    {"x1^2*x2 - x0^3", 2},
      {"x0^3 + x0^2*x1", 2}, {"1/2*x0^3 + x1^2*x2", 2},
  };
  for (const auto& [text, r] : corpus) {
    CAPTURE(text);
    auto f = parse_polynomial(text, r);
    StateSet pruned = detail::state_degree_dD_impl(f, 1, 1000000, true);
    StateSet full = detail::state_degree_dD_impl(f, 1, 1000000, false);
    CHECK(pruned.points() == full.points());
  }
}

TEST_CASE("tuple enumeration respects the cap") {
  auto cusp = parse_polynomial("x1^2*x2 - x0^3", 2);
  CHECK_THROWS_AS(state_degree_dD(cusp, 1, 5), CapExceeded);
  CHECK_NOTHROW(state_degree_dD(cusp, 1, 1000));
}

}  // TEST_SUITE
