#pragma once

#include <string>

#include "maxvar/quadratic.hpp"

namespace maxvar {

// Plain decimal with `sig` significant digits, round half to even.
std::string to_decimal(const Rational& x, int sig = 12);

// Same for algebraic values; refines the enclosure until the rounded
// digit string is determined.
std::string to_decimal(const AlgebraicSum& x, int sig = 12);
std::string to_decimal(const QuadraticValue& x, int sig = 12);

}  // namespace maxvar
