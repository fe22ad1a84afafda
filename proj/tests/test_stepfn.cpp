#include "doctest.h"
#include "maxvar/builtins.hpp"
#include "maxvar/stepfn.hpp"
#include "maxvar/verify.hpp"
#include "oracles.hpp"

using namespace maxvar;

namespace {

StepFunction chi01() {
  return make_indicator({RealInterval::closed(Rational(0), Rational(1))},
                        Rational(1));
}

}  // namespace

TEST_CASE("real interval parse and str") {
  auto I = RealInterval::parse("[-1, 1]");
  CHECK(I.lo == Rational(-1));
  CHECK(I.hi == Rational(1));
  CHECK(I.lo_closed);
  CHECK(I.str() == "[-1,1]");
  auto J = RealInterval::parse("(-inf,3]");
  CHECK_FALSE(J.lo.has_value());
  CHECK(J.hi == Rational(3));
  CHECK(RealInterval::parse("R").str() == "(-inf,inf)");
  CHECK(RealInterval::parse("(1/2, 5/2)").contains(Rational(1)));
  CHECK_FALSE(RealInterval::parse("(1/2, 5/2)").contains(Rational(1, 2)));
  CHECK_THROWS_AS(RealInterval::parse("[3,1]"), std::invalid_argument);
  CHECK_THROWS_AS(RealInterval::parse("nonsense"), std::invalid_argument);
  CHECK(RealInterval::point(Rational(2)).degenerate());
}

TEST_CASE("construction and normalization") {
  StepFunction f({Rational(0), Rational(1)},
                 {Rational(0), Rational(2), Rational(0)},
                 {Rational(1), Rational(1)});
  CHECK(f.jump_count() == 2);
  // removable breakpoint disappears
  StepFunction g({Rational(0), Rational(1)},
                 {Rational(0), Rational(0), Rational(3)},
                 {Rational(0), Rational(2)});
  CHECK(g.jump_count() == 1);
  CHECK(g.breakpoints()[0] == Rational(1));
  CHECK_THROWS_AS(StepFunction({Rational(1), Rational(0)},
                               {Rational(0), Rational(1), Rational(0)},
                               {Rational(0), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({Rational(0)}, {Rational(0), Rational(-1)},
                               {Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({Rational(0)}, {Rational(0)}, {Rational(0)}),
                  std::invalid_argument);
  CHECK(StepFunction(Rational(2)).is_constant());
}

TEST_CASE("evaluation, limits, integral") {
  StepFunction f = chi01();
  CHECK(f(Rational(1, 2)) == Rational(1));
  CHECK(f(Rational(0)) == Rational(1, 2));
  CHECK(f(Rational(1)) == Rational(1, 2));
  CHECK(f(Rational(2)) == Rational(0));
  CHECK(f.left_limit(Rational(0)) == Rational(0));
  CHECK(f.right_limit(Rational(0)) == Rational(1));
  CHECK(f.left_limit(Rational(1)) == Rational(1));
  CHECK(f.right_limit(Rational(1)) == Rational(0));
  CHECK(f.max_value() == Rational(1));
  CHECK(f.integral(Rational(-1), Rational(2)) == Rational(1));
  CHECK(f.integral(Rational(1, 4), Rational(1, 2)) == Rational(1, 4));
  CHECK(f.integral(Rational(-5), Rational(-4)) == Rational(0));
  CHECK_THROWS_AS(f.integral(Rational(1), Rational(0)), std::invalid_argument);
}

TEST_CASE("sum and scaling") {
  StepFunction f = chi01();
  StepFunction g =
      make_indicator({RealInterval::closed(Rational(1, 2), Rational(2))},
                     Rational(1));
  StepFunction h = f + g;
  CHECK(h(Rational(3, 4)) == Rational(2));
  CHECK(h(Rational(1, 2)) == Rational(3, 2));  // 1 + 1/2
  CHECK(h(Rational(3, 2)) == Rational(1));
  CHECK(h.integral(Rational(-1), Rational(3)) == Rational(5, 2));
  StepFunction s = f.scaled(Rational(2, 5));
  CHECK(s(Rational(1, 2)) == Rational(2, 5));
  CHECK(s(Rational(0)) == Rational(1, 5));
  CHECK_THROWS_AS(f.scaled(Rational(-1)), std::invalid_argument);
}

TEST_CASE("serialize and parse round trip") {
  StepFunction f = two_bump(Rational(3, 2));
  std::string text = f.serialize();
  CHECK(StepFunction::parse(text) == f);
  CHECK(text.substr(0, 12) == "breakpoints:");
  CHECK_THROWS_AS(StepFunction::parse("garbage"), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction::parse("breakpoints: 0\npoint_values: 0\n"),
                  std::invalid_argument);
  StepFunction z{Rational(0)};
  CHECK(StepFunction::parse(z.serialize()) == z);
}

TEST_CASE("indicator conventions") {
  StepFunction f = make_indicator(
      {RealInterval::closed(Rational(-2), Rational(-1)),
       RealInterval::closed(Rational(1), Rational(2))},
      Rational(4));
  CHECK(f(Rational(-3, 2)) == Rational(4));
  CHECK(f(Rational(-2)) == Rational(2));
  CHECK(f(Rational(0)) == Rational(0));
  CHECK_THROWS_AS(
      make_indicator({RealInterval::closed(Rational(0), Rational(2)),
                      RealInterval::closed(Rational(1), Rational(3))},
                     Rational(1)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_indicator({RealInterval::closed(Rational(0), Rational(1)),
                      RealInterval::closed(Rational(1), Rational(2))},
                     Rational(1)),
      std::invalid_argument);
  CHECK_THROWS_AS(make_indicator({RealInterval::right_ray(Rational(0))},
                                 Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_indicator({RealInterval::closed(Rational(1), Rational(1))},
                     Rational(1)),
      std::invalid_argument);
  CHECK_THROWS_AS(make_indicator({RealInterval::closed(Rational(0), Rational(1))},
                                 Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("affine pullback") {
  StepFunction f = chi01();
  StepFunction g = affine_pullback(f, Rational(2), Rational(-1));
  // g(x) = f(2x - 1): indicator of [1/2, 1]
  CHECK(g(Rational(3, 4)) == Rational(1));
  CHECK(g(Rational(1, 2)) == Rational(1, 2));
  CHECK(g(Rational(1, 4)) == Rational(0));
  StepFunction r = affine_pullback(f, Rational(-1), Rational(0));
  // r(x) = f(-x): indicator of [-1, 0]
  CHECK(r(Rational(-1, 2)) == Rational(1));
  CHECK(r(Rational(-1)) == Rational(1, 2));
  CHECK(r(Rational(1, 2)) == Rational(0));
  CHECK_THROWS_AS(affine_pullback(f, Rational(0), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("variation basics") {
  StepFunction f = chi01();
  CHECK(variation(f, RealInterval::all()) == Rational(2));
  CHECK(variation(f, RealInterval::closed(Rational(0), Rational(1))) ==
        Rational(1));  // 1/2 -> 1 -> 1/2
  CHECK(variation(f, RealInterval::open(Rational(0), Rational(1))) ==
        Rational(0));
  CHECK(variation(f, RealInterval::closed(Rational(-1), Rational(1, 2))) ==
        Rational(1));
  CHECK(variation(f, RealInterval::point(Rational(0))) == Rational(0));
  CHECK(variation(two_bump(Rational(3, 2)), RealInterval::all()) ==
        Rational(4));
  CHECK(variation(two_bump(Rational(3, 2)),
                  RealInterval::closed(Rational(-1), Rational(1))) ==
        Rational(1));
  CHECK(variation(StepFunction(Rational(5)), RealInterval::all()) ==
        Rational(0));
}

TEST_CASE("variation matches the brute-force sampling supremum") {
  Generator gen(20240817);
  for (int i = 0; i < 40; ++i) {
    StepFunction f = gen.grid_step(4, 10);
    if (f.is_constant()) continue;
    Rational lo = f.breakpoints().front() - Rational(1);
    Rational hi = f.breakpoints().back() + Rational(1);
    auto pts = oracle::variation_sampling(f, lo, hi);
    CHECK(variation(f, RealInterval::closed(lo, hi)) ==
          oracle::brute_var_points(f, pts));
  }
}

TEST_CASE("builtin shapes") {
  StepFunction f = two_bump(Rational(3, 2));
  CHECK(f(Rational(-5, 4)) == Rational(1));
  CHECK(f(Rational(0)) == Rational(0));
  CHECK(f(Rational(3, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(two_bump(Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(two_bump(Rational(3)), std::invalid_argument);
  StepFunction p = plateau_bump();
  CHECK(p(Rational(0)) == Rational(2, 5));
  CHECK(p(Rational(-5, 4)) == Rational(1));
  CHECK(p(Rational(1, 2)) == Rational(1, 5));
  StepFunction q = four_bump();
  CHECK(q(Rational(-9, 4)) == Rational(1));
  CHECK(q(Rational(0)) == Rational(0));
  CHECK(q(Rational(13, 4)) == Rational(1));
  CHECK(builtin_function("example-1-8", Rational(2)) == p);
  CHECK_THROWS_AS(builtin_function("nope", Rational(2)),
                  std::invalid_argument);
}
