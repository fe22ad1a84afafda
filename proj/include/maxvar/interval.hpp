#pragma once

#include <optional>
#include <string>

#include "maxvar/rational.hpp"

namespace maxvar {

// Real interval with rational or infinite endpoints.  nullopt = -inf on the
// left, +inf on the right.
struct RealInterval {
  std::optional<Rational> lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static RealInterval all() { return {std::nullopt, std::nullopt}; }
  static RealInterval closed(Rational a, Rational b);
  static RealInterval open(Rational a, Rational b);
  static RealInterval point(Rational a) { return closed(a, a); }
  static RealInterval left_ray(Rational b, bool closed = true) {
    return {std::nullopt, std::move(b), false, closed};
  }
  static RealInterval right_ray(Rational a, bool closed = true) {
    return {std::move(a), std::nullopt, closed, false};
  }

  bool bounded() const { return lo.has_value() && hi.has_value(); }
  bool degenerate() const { return bounded() && *lo == *hi; }
  bool contains(const Rational& x) const;
  Rational length() const;  // requires bounded

  std::string str() const;
  static RealInterval parse(const std::string& s);
};

}  // namespace maxvar
