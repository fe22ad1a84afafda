#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxvar/quadratic.hpp"

namespace maxvar {

// Linear-fractional function x -> (a + b*x) / (c + d*x).  Removable
// singularities (numerator and denominator vanish together) evaluate to the
// limit b/d.
struct Mobius {
  Rational a, b, c, d;

  static Mobius constant(Rational v) {
    return {std::move(v), Rational(0), Rational(1), Rational(0)};
  }

  Rational operator()(const Rational& x) const;
  QuadraticValue operator()(const QuadraticValue& x) const;

  // sign of the derivative (b*c - a*d) / (c + d*x)^2 away from the pole
  int slope_sign() const { return (b * c - a * d).sign(); }
  bool is_constant() const { return slope_sign() == 0; }

  bool same_function(const Mobius& o) const;
  // scale so the coefficient vector is primitive-integer with positive lead
  Mobius normalized() const;
  std::string str() const;
};

// Crossing points of two Mobius functions (roots of the cross-multiplied
// difference).  identical is set when the two are the same function.
std::vector<QuadraticValue> mobius_crossings(const Mobius& f, const Mobius& g,
                                             bool& identical);

struct MobiusPiece {
  Mobius fn;
  QuadraticValue lo, hi;
  std::optional<Rational> anchor;  // jump y; nullopt = tail / boundary source
};

// Ordered pieces tiling [lo, hi].  Adjacent pieces agree in value at shared
// breakpoints except possibly at jump anchors of f, where the represented
// maximal function itself can be discontinuous.
struct PiecewiseMobius {
  std::vector<MobiusPiece> pieces;

  const QuadraticValue& lo() const { return pieces.front().lo; }
  const QuadraticValue& hi() const { return pieces.back().hi; }
  // pointwise max over pieces whose closed domain contains x
  QuadraticValue eval_sup(const QuadraticValue& x) const;
  std::vector<QuadraticValue> breakpoints() const;  // interior piece joints
  std::string serialize() const;
};

}  // namespace maxvar
