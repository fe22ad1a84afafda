#include "doctest.h"
#include "maxvar/builtins.hpp"
#include "maxvar/maxfun.hpp"
#include "maxvar/verify.hpp"
#include "oracles.hpp"

using namespace maxvar;

namespace {

StepFunction chi01() {
  return make_indicator({RealInterval::closed(Rational(0), Rational(1))},
                        Rational(1));
}

}  // namespace

TEST_CASE("mobius functions") {
  Mobius half_x{Rational(0), Rational(1), Rational(2), Rational(0)};
  CHECK(half_x(Rational(3)) == Rational(3, 2));
  CHECK(half_x.slope_sign() > 0);
  Mobius removable{Rational(-1), Rational(1), Rational(-1), Rational(1)};
  CHECK(removable(Rational(1)) == Rational(1));  // (x-1)/(x-1) -> b/d
  Mobius pole{Rational(1), Rational(0), Rational(-1), Rational(1)};
  CHECK_THROWS_AS(pole(Rational(1)), std::domain_error);
  Mobius a{Rational(1), Rational(1), Rational(1), Rational(0)};
  Mobius b{Rational(2), Rational(2), Rational(2), Rational(0)};
  CHECK(a.same_function(b));
  CHECK_FALSE(a.same_function(half_x));
  CHECK(Mobius{Rational(1, 2), Rational(1, 2), Rational(1), Rational(0)}
            .normalized()
            .str() == "(1,1,2,0)");

  Mobius identity{Rational(0), Rational(1), Rational(1), Rational(0)};
  Mobius c_half = Mobius::constant(Rational(1, 2));
  bool identical = true;
  auto roots = mobius_crossings(identity, c_half, identical);
  CHECK_FALSE(identical);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].rational() == Rational(1, 2));
  mobius_crossings(a, b, identical);
  CHECK(identical);
}

TEST_CASE("pointwise maximal function of a single indicator") {
  StepFunction f = chi01();
  CHECK(eval_mf(f, Rational(1, 2)) == Rational(1));
  CHECK(eval_mf(f, Rational(0)) == Rational(1, 2));
  CHECK(eval_mf(f, Rational(1)) == Rational(1, 2));
  CHECK(eval_mf(f, Rational(2)) == Rational(1, 4));
  CHECK(eval_mf(f, Rational(-1)) == Rational(1, 4));
  CHECK(eval_mf(f, Rational(-9)) == Rational(1, 20));  // window [-19, 1]
  CHECK(mf_limit_left(f) == Rational(0));
  CHECK(mf_limit_right(f) == Rational(0));
}

TEST_CASE("two-bump example values") {
  for (Rational c : {Rational(3, 2), Rational(5, 4), Rational(11, 5)}) {
    StepFunction f = two_bump(c);
    CHECK(eval_mf(f, Rational(0)) == (c - 1) / c);
    CHECK(eval_mf(f, c / Rational(3)) == (Rational(3) * c - 3) / (Rational(4) * c));
    CHECK(eval_mf(f, -c / Rational(3)) == (Rational(3) * c - 3) / (Rational(4) * c));
    AlgebraicSum v = variation_mf(f, RealInterval::closed(Rational(-1), Rational(1)));
    REQUIRE(v.is_rational());
    CHECK(v.rational_part() == Rational(1) / c);
  }
  StepFunction f = two_bump(Rational(3, 2));
  CHECK(eval_mf(f, Rational(1, 2)) == Rational(1, 4));
  CHECK(eval_mf(f, Rational(-1)) == Rational(1, 2));
  CHECK(eval_mf(f, Rational(5, 4)) == Rational(1));
}

TEST_CASE("plateau example value") {
  StepFunction f = plateau_bump();
  CHECK(eval_mf(f, Rational(0)) == Rational(7, 15));
  CHECK(f(Rational(0)) == Rational(2, 5));
}

TEST_CASE("auxiliary operators on the four-bump function") {
  StepFunction f = four_bump();
  Rational one(1);
  CHECK(m0_eval(f, Rational(0), one) == Rational(0));
  CHECK(m1_eval(f, Rational(0), one) == Rational(2, 5));
  for (int j = 0; j <= 10; ++j) {
    Rational x(j, 10);
    CHECK(eval_mf(f, x) == max(m0_eval(f, x, one), m1_eval(f, x, one)));
  }
  CHECK_THROWS_AS(m1_eval(f, Rational(-2), one), std::invalid_argument);
  CHECK_THROWS_AS(m0_eval(f, Rational(-1), one), std::invalid_argument);
}

TEST_CASE("limits with nonzero tails") {
  StepFunction f({Rational(0)}, {Rational(2), Rational(0)}, {Rational(1)});
  CHECK(mf_limit_left(f) == Rational(2));
  CHECK(mf_limit_right(f) == Rational(1));  // (2 + 0)/2
  CHECK(eval_mf(StepFunction(Rational(3)), Rational(7)) == Rational(3));
}

TEST_CASE("envelope agrees with pointwise evaluation") {
  Generator gen(91);
  for (int i = 0; i < 25; ++i) {
    StepFunction f = i % 2 ? gen.grid_step(4, 12) : gen.indicator(1, 3, 20);
    if (f.is_constant()) continue;
    Rational lo = f.breakpoints().front() - Rational(2);
    Rational hi = f.breakpoints().back() + Rational(2);
    auto env = build_envelope(f, lo, hi, MaxOp::Full, Rational(0));
    for (int j = 0; j < 12; ++j) {
      Rational x = lo + (hi - lo) * Rational(2 * j + 1, 24);
      bool at_jump = false;
      for (const auto& b : f.breakpoints()) at_jump = at_jump || b == x;
      if (at_jump) continue;
      CHECK(cmp(env.eval_sup(QuadraticValue{x}),
                QuadraticValue{eval_mf(f, x)}) == 0);
    }
    // lower semicontinuity at every node: the value never exceeds either
    // one-sided envelope limit
    for (const auto& piece : env.pieces) {
      for (const QuadraticValue& end : {piece.lo, piece.hi}) {
        if (!end.is_rational()) continue;
        CHECK(cmp(QuadraticValue{eval_mf(f, end.rational())},
                  piece.fn(end)) <= 0);
      }
    }
  }
}

TEST_CASE("true value never exceeds one-sided limits at jumps") {
  // Mf is lower semicontinuous; at an anchor the point value is the min of
  // the one-sided limits for these examples
  StepFunction f = chi01();
  auto env = build_envelope(f, Rational(-1), Rational(2), MaxOp::Full,
                            Rational(0));
  for (const auto& y : {Rational(0), Rational(1)}) {
    Rational v = eval_mf(f, y);
    for (const auto& piece : env.pieces) {
      bool touches = (piece.lo.is_rational() && piece.lo.rational() == y) ||
                     (piece.hi.is_rational() && piece.hi.rational() == y);
      if (!touches) continue;
      CHECK(v <= piece.fn(QuadraticValue{y}).rational());
    }
  }
}

TEST_CASE("affine equivariance of the maximal operator") {
  Generator gen(4242);
  for (int i = 0; i < 10; ++i) {
    StepFunction f = gen.indicator(1, 3, 20);
    Rational alpha(1 + gen.uniform(5), 1 + gen.uniform(3));
    if (gen.raw() % 2) alpha = -alpha;
    Rational beta = gen.rational(3, 8);
    StepFunction g = affine_pullback(f, alpha, beta);
    for (int j = 0; j < 6; ++j) {
      Rational x = gen.rational(10, 12);
      CHECK(eval_mf(g, x) == eval_mf(f, alpha * x + beta));
    }
  }
}

TEST_CASE("variation of Mf over the whole line") {
  StepFunction f = chi01();
  AlgebraicSum v = variation_mf(f, RealInterval::all());
  REQUIRE(v.is_rational());
  CHECK(v.rational_part() == Rational(2));
  CHECK(variation_mf(StepFunction(Rational(7)), RealInterval::all()).is_zero());
  CHECK(variation_mf(f, RealInterval::point(Rational(0))).is_zero());

  // numeric cross-check for the two-bump function
  StepFunction g = two_bump(Rational(3, 2));
  Rational X = max(clear_abscissa(g, true), -clear_abscissa(g, false));
  AlgebraicSum inner = variation_mf(g, RealInterval::closed(-X, X));
  double numeric = oracle::sampled_var_mf(g, -X.to_double(), X.to_double(),
                                          20000);
  CHECK(inner.to_double() == doctest::Approx(numeric).epsilon(0.01));
  AlgebraicSum whole = variation_mf(g, RealInterval::all());
  double tails = eval_mf(g, -X).to_double() + eval_mf(g, X).to_double();
  CHECK(whole.to_double() == doctest::Approx(numeric + tails).epsilon(0.01));
  CHECK(compare_sums(whole, AlgebraicSum(Rational(4))) == Ordering::Less);
}

TEST_CASE("dense radius oracle sandwich") {
  Generator gen(777);
  for (int i = 0; i < 10; ++i) {
    StepFunction f = gen.grid_step(4, 100);
    if (f.is_constant()) continue;
    for (int j = 0; j < 5; ++j) {
      long long m = gen.uniform(2001) - 1000;  // x = m/100 in [-10, 10]
      Rational x(m, 100);
      double lower = oracle::dense_mf(f, x);
      double exact = eval_mf(f, x).to_double();
      CHECK(lower <= exact + 1e-9);
      CHECK(exact - lower < 1e-6);
    }
  }
}

TEST_CASE("attachment sets") {
  StepFunction f = chi01();
  auto att = attachment_set(f, RealInterval::closed(Rational(-1), Rational(2)));
  REQUIRE(att.size() == 1);
  CHECK(cmp(att[0].lo, QuadraticValue{Rational(0)}) == 0);
  CHECK(cmp(att[0].hi, QuadraticValue{Rational(1)}) == 0);
  CHECK(att[0].lo_closed);
  CHECK(att[0].hi_closed);

  StepFunction g = two_bump(Rational(3, 2));
  auto att2 = attachment_set(g, RealInterval::closed(Rational(-2), Rational(2)));
  REQUIRE(att2.size() == 2);
  CHECK(cmp(att2[0].lo, QuadraticValue{Rational(-3, 2)}) == 0);
  CHECK(cmp(att2[0].hi, QuadraticValue{Rational(-1)}) == 0);
  CHECK(cmp(att2[1].lo, QuadraticValue{Rational(1)}) == 0);
  CHECK(cmp(att2[1].hi, QuadraticValue{Rational(3, 2)}) == 0);

  // the plateau attaches exactly where 2 <= 8|x| <= 3
  StepFunction p = plateau_bump();
  CHECK(eval_mf(p, Rational(1, 3)) == Rational(2, 5));
  CHECK(eval_mf(p, Rational(-1, 3)) == Rational(2, 5));
  auto att3 = attachment_set(
      p, RealInterval::closed(Rational(-1, 2), Rational(1, 2)));
  REQUIRE(att3.size() == 2);
  CHECK(cmp(att3[0].lo, QuadraticValue{Rational(-3, 8)}) == 0);
  CHECK(cmp(att3[0].hi, QuadraticValue{Rational(-1, 4)}) == 0);
  CHECK(cmp(att3[1].lo, QuadraticValue{Rational(1, 4)}) == 0);
  CHECK(cmp(att3[1].hi, QuadraticValue{Rational(3, 8)}) == 0);
}

TEST_CASE("canonical representatives") {
  StepFunction f = chi01();
  CHECK(canonical_representative(f) == f);
  StepFunction g = two_bump(Rational(3, 2));
  CHECK(canonical_representative(g) == g);
  CHECK_THROWS_WITH_AS(canonical_representative(plateau_bump()),
                       doctest::Contains("non-step representative"),
                       std::runtime_error);
  CHECK(canonical_representative(StepFunction(Rational(2))) ==
        StepFunction(Rational(2)));
}

TEST_CASE("envelope monotone helper") {
  StepFunction f = chi01();
  auto te = [&f](const Rational& x) { return eval_mf(f, x); };
  Rational X = clear_abscissa(f, true);
  auto env = build_envelope(f, Rational(1), X, MaxOp::Full, Rational(0));
  CHECK(envelope_monotone(env, -1, te));
  CHECK_FALSE(envelope_monotone(env, 1, te));
}
