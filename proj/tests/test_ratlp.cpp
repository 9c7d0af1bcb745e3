#include <doctest.h>

#include "natex/ratlp.hpp"
#include "natex/testgen.hpp"
#include "oracles.hpp"

using namespace natex;
using namespace natex::ratlp;

namespace {

RatVec rv(std::vector<Rational> vals) {
  RatVec v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

}  // namespace

TEST_CASE("bounded maximum") {
  auto lp = LinearProgram::maximize(rv({1}));
  lp.add(rv({1}), Relation::LessEq, 1);
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(cmp(*out.value, Rational(1)) == 0);
  CHECK(satisfies(lp, *out.point));
}

TEST_CASE("infeasible by sign") {
  auto lp = LinearProgram::feasibility(1);
  lp.add(rv({-1}), Relation::GreaterEq, 1);
  CHECK(solve(lp).status == LPStatus::Infeasible);
}

TEST_CASE("unbounded diagonal") {
  auto lp = LinearProgram::maximize(rv({1, 1}));
  lp.add(rv({1, -1}), Relation::LessEq, 0);
  lp.add(rv({-1, 1}), Relation::LessEq, 0);
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Unbounded);
  REQUIRE(out.point);
  CHECK(satisfies(lp, *out.point));
  CHECK(sgn((*out.point)[0] + (*out.point)[1]) > 0);
}

TEST_CASE("zero-variable programs") {
  auto contradictory = LinearProgram::feasibility(0);
  contradictory.add(RatVec(0), Relation::Equal, 1);
  CHECK(solve(contradictory).status == LPStatus::Infeasible);

  auto trivial = LinearProgram::feasibility(0);
  trivial.add(RatVec(0), Relation::LessEq, 0);
  CHECK(solve(trivial).status == LPStatus::FeasiblePoint);
}

TEST_CASE("free variables reach negative optima") {
  auto lp = LinearProgram::maximize(rv({-1}));
  lp.nonneg = {false};
  lp.add(rv({1}), Relation::GreaterEq, -3);
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(cmp(*out.value, Rational(3)) == 0);
  CHECK(cmp((*out.point)[0], Rational(-3)) == 0);
}

TEST_CASE("equality constraints bind exactly") {
  auto lp = LinearProgram::maximize(rv({1, 0}));
  lp.add(rv({1, 1}), Relation::Equal, Rational(1, 3));
  lp.add(rv({1, 0}), Relation::LessEq, Rational(1, 4));
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(cmp(*out.value, Rational(1, 4)) == 0);
  CHECK(satisfies(lp, *out.point));
}

TEST_CASE("degenerate cycling guard") {
  // Klee-Minty-flavoured degeneracy: many ties at zero; Bland's rule must
  // still terminate and reach the optimum.
  auto lp = LinearProgram::maximize(rv({1, 1, 1}));
  lp.add(rv({1, -1, 0}), Relation::LessEq, 0);
  lp.add(rv({-1, 1, 0}), Relation::LessEq, 0);
  lp.add(rv({0, 1, -1}), Relation::LessEq, 0);
  lp.add(rv({0, -1, 1}), Relation::LessEq, 0);
  lp.add(rv({1, 1, 1}), Relation::LessEq, 1);
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(cmp(*out.value, Rational(1)) == 0);
}

TEST_CASE("redundant equality rows are dropped, not fatal") {
  // duplicated equality leaves an artificial basic at zero after phase 1
  auto lp = LinearProgram::maximize(rv({1, 0}));
  lp.add(rv({1, 1}), Relation::Equal, 1);
  lp.add(rv({1, 1}), Relation::Equal, 1);
  lp.add(rv({2, 2}), Relation::Equal, 2);
  const auto out = solve(lp);
  REQUIRE(out.status == LPStatus::Optimal);
  CHECK(cmp(*out.value, Rational(1)) == 0);
  CHECK(satisfies(lp, *out.point));
}

TEST_CASE("malformed programs are refused") {
  auto lp = LinearProgram::feasibility(2);
  CHECK_THROWS_AS(lp.add(rv({1}), Relation::LessEq, 0), DimensionError);
  lp.nonneg = {true};
  lp.add(rv({1, 1}), Relation::LessEq, 0);
  CHECK_THROWS_AS(solve(lp), DimensionError);
}

TEST_CASE("status and optimum agree with variable elimination") {
  testgen::Rng rng(2024);
  for (int i = 0; i < 120; ++i) {
    const auto lp = testgen::linear_program(rng);
    const auto fast = solve(lp);
    const auto slow = oracle::solve(lp);
    CAPTURE(i);
    REQUIRE(fast.status == slow.status);
    if (fast.status == LPStatus::Optimal) {
      CHECK(cmp(*fast.value, *slow.value) == 0);
      CHECK(satisfies(lp, *fast.point));
    }
    if (fast.status == LPStatus::FeasiblePoint || fast.status == LPStatus::Unbounded) {
      CHECK(satisfies(lp, *fast.point));
    }
  }
}

TEST_CASE("identical programs yield identical outcomes") {
  testgen::Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const auto lp = testgen::linear_program(rng);
    const auto a = solve(lp);
    const auto b = solve(lp);
    REQUIRE(a.status == b.status);
    REQUIRE(a.point.has_value() == b.point.has_value());
    if (a.point) CHECK(lex_compare(*a.point, *b.point) == 0);
    if (a.value) CHECK(cmp(*a.value, *b.value) == 0);
  }
}
