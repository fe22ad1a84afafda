#include "maxvar/builtins.hpp"

namespace maxvar {

StepFunction two_bump(const Rational& c) {
  if (!(Rational(1) < c) || !(c < Rational(3)))
    throw std::invalid_argument("parameter c must lie in (1, 3)");
  return make_indicator(
      {RealInterval::closed(-c, Rational(-1)), RealInterval::closed(Rational(1), c)},
      Rational(1));
}

StepFunction plateau_bump() {
  StepFunction bumps = make_indicator({RealInterval::closed(Rational(-3, 2), Rational(-1)),
                                       RealInterval::closed(Rational(1), Rational(3, 2))},
                                      Rational(1));
  StepFunction plateau =
      make_indicator({RealInterval::closed(Rational(-1, 2), Rational(1, 2))},
                     Rational(2, 5));
  return bumps + plateau;
}

StepFunction four_bump() {
  return make_indicator({RealInterval::closed(Rational(-5, 2), Rational(-2)),
                         RealInterval::closed(Rational(-3, 2), Rational(-1)),
                         RealInterval::closed(Rational(1), Rational(2)),
                         RealInterval::closed(Rational(3), Rational(7, 2))},
                        Rational(1));
}

StepFunction builtin_function(const std::string& name, const Rational& c) {
  if (name == "example-1-6") return two_bump(c);
  if (name == "example-1-8") return plateau_bump();
  if (name == "figure-3") return four_bump();
  throw std::invalid_argument("unknown builtin: " + name);
}

}  // namespace maxvar
