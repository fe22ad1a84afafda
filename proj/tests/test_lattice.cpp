#include "doctest.h"
#include "maxvar/lattice.hpp"
#include "maxvar/maxfun.hpp"
#include "maxvar/verify.hpp"

using namespace maxvar;

namespace {

LatticeFunction point_mass() {
  return LatticeFunction(0, HalfInt::integer(0), {Rational(1)}, Rational(0),
                         Rational(0));
}

}  // namespace

TEST_CASE("half integer sites") {
  CHECK(HalfInt::integer(3).str() == "3");
  CHECK(HalfInt::half(5).str() == "5/2");
  CHECK(HalfInt::half(-7).to_rational() == Rational(-7, 2));
  CHECK(HalfInt::parse("4") == HalfInt::integer(4));
  CHECK(HalfInt::parse("-3/2") == HalfInt::half(-3));
  CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);
}

TEST_CASE("lattice function basics") {
  LatticeFunction f(0, HalfInt::integer(-1),
                    {Rational(1), Rational(0), Rational(2)}, Rational(0),
                    Rational(0));
  CHECK(f(HalfInt::integer(-1)) == Rational(1));
  CHECK(f(HalfInt::integer(0)) == Rational(0));
  CHECK(f(HalfInt::integer(1)) == Rational(2));
  CHECK(f(HalfInt::integer(5)) == Rational(0));
  CHECK(f(HalfInt::integer(-9)) == Rational(0));
  CHECK_THROWS_AS(f(HalfInt::half(1)), std::invalid_argument);
  CHECK(f.max_value() == Rational(2));
  CHECK(f.sum_range(HalfInt::integer(-3), HalfInt::integer(3)) == Rational(3));
  CHECK_FALSE(f.is_constant());
  CHECK(LatticeFunction(Rational(2)).is_constant());
  CHECK_THROWS_AS(LatticeFunction(0, HalfInt::half(1), {Rational(1)},
                                  Rational(0), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(LatticeFunction(0, HalfInt::integer(0), {Rational(-1)},
                                  Rational(0), Rational(0)),
                  std::invalid_argument);

  // trimming: tail-valued border sites fold into the tails
  LatticeFunction g(0, HalfInt::integer(0),
                    {Rational(0), Rational(3), Rational(0)}, Rational(0),
                    Rational(0));
  CHECK(g.window_lo() == HalfInt::integer(1));
  CHECK(g.window_hi() == HalfInt::integer(1));
  CHECK(g == LatticeFunction(0, HalfInt::integer(1), {Rational(3)},
                             Rational(0), Rational(0)));
}

TEST_CASE("lattice serialize round trip") {
  LatticeFunction f(1, HalfInt::half(-3), {Rational(1, 2), Rational(2)},
                    Rational(0), Rational(1, 3));
  CHECK(LatticeFunction::parse(f.serialize()) == f);
  LatticeFunction c(Rational(5, 2));
  CHECK(LatticeFunction::parse(c.serialize()) == c);
  CHECK_THROWS_AS(LatticeFunction::parse("garbage"), std::invalid_argument);
}

TEST_CASE("point mass maximal function") {
  LatticeFunction f = point_mass();
  for (long long n : {-4, -2, 0, 1, 3, 7}) {
    Rational expect(1, 2 * std::llabs(n) + 1);
    CHECK(discrete_mf(f, HalfInt::integer(n)) == expect);
    CHECK(brute_mf(f, HalfInt::integer(n), 40) == expect);
  }
  CHECK(discrete_var_mf(f) == Rational(2));
}

TEST_CASE("discrete maximal function vs brute force") {
  Generator gen(555);
  for (int i = 0; i < 30; ++i) {
    LatticeFunction f = gen.arbitrary_lattice(7);
    long long lo = f.window_lo().h / 2 - 6, hi = lo + 18;
    for (long long n = lo; n <= hi; ++n)
      CHECK(discrete_mf(f, HalfInt::integer(n)) ==
            brute_mf(f, HalfInt::integer(n), 80));
  }
  CHECK_THROWS_AS(brute_mf(point_mass(), HalfInt::integer(30), 3),
                  std::invalid_argument);
  CHECK(brute_mf(LatticeFunction(Rational(3)), HalfInt::integer(0), 0) ==
        Rational(3));
  CHECK(discrete_mf(LatticeFunction(Rational(3)), HalfInt::integer(2)) ==
        Rational(3));
}

TEST_CASE("half lattice with adjoined centre") {
  LatticeFunction f(1, HalfInt::half(-3), {Rational(2), Rational(0), Rational(1)},
                    Rational(0), Rational(0));
  // centre 0 is allowed even though it is off the lattice
  Rational v0 = discrete_mf(f, HalfInt{0});
  CHECK(v0 == brute_mf(f, HalfInt{0}, 50));
  CHECK_THROWS_AS(discrete_mf(f, HalfInt::integer(1)), std::invalid_argument);
  CHECK(discrete_mf(f, HalfInt::half(3)) == brute_mf(f, HalfInt::half(3), 50));
}

TEST_CASE("discrete variation") {
  LatticeFunction f(0, HalfInt::integer(0), {Rational(1), Rational(3)},
                    Rational(0), Rational(0));
  CHECK(discrete_var(f, DiscreteInterval::all()) == Rational(6));  // 1+2+3
  CHECK(discrete_var(f, DiscreteInterval::closed(HalfInt::integer(0),
                                                 HalfInt::integer(1))) ==
        Rational(2));
  CHECK(discrete_var(LatticeFunction(Rational(4)), DiscreteInterval::all()) ==
        Rational(0));
  LatticeFunction g(0, HalfInt::integer(0), {Rational(2)}, Rational(1),
                    Rational(0));
  CHECK(discrete_var(g, DiscreteInterval::all()) == Rational(3));  // 1->2->0
}

TEST_CASE("restricted discrete operators") {
  LatticeFunction f(0, HalfInt::integer(-4),
                    {Rational(1), Rational(1), Rational(0), Rational(0),
                     Rational(0), Rational(0), Rational(0), Rational(1)},
                    Rational(0), Rational(0));
  // f = 1 at -4, -3, 3; vanishing on (-3, 3)
  HalfInt a = HalfInt::integer(3);
  CHECK(discrete_m0(f, HalfInt::integer(0), a) == Rational(0));
  // windows [v, -v] for v <= -3: best is [-4, 4] with mass 3 over 9 sites
  CHECK(discrete_m1(f, HalfInt::integer(0), a) == Rational(1, 3));
  CHECK_THROWS_AS(discrete_m0(f, HalfInt::integer(4), a), std::invalid_argument);
  CHECK_THROWS_AS(discrete_m0(f, HalfInt::integer(0), HalfInt::integer(-1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(discrete_m1(f, HalfInt::half(1), a), std::invalid_argument);
}

TEST_CASE("embedding into a step function") {
  Generator gen(808);
  for (int i = 0; i < 20; ++i) {
    LatticeFunction f = gen.arbitrary_lattice(6);
    StepFunction fc = embed_to_step(f);
    long long lo = f.window_lo().h / 2 - 5;
    for (long long n = lo; n <= lo + 14; ++n)
      CHECK(discrete_mf(f, HalfInt::integer(n)) ==
            eval_mf(fc, Rational(n)));
    CHECK(discrete_var(f, DiscreteInterval::all()) ==
          variation(fc, RealInterval::all()));
  }
  CHECK(embed_to_step(LatticeFunction(Rational(2))) ==
        StepFunction(Rational(2)));
  CHECK_THROWS_AS(embed_to_step(LatticeFunction(
                      1, HalfInt::half(1), {Rational(1)}, Rational(0),
                      Rational(0))),
                  std::invalid_argument);
}
