#pragma once

#include <string>
#include <vector>

#include "maxvar/interval.hpp"
#include "maxvar/rational.hpp"

namespace maxvar {

// Nonnegative step function on the line: constant on the open pieces between
// breakpoints, with explicit point values at the breakpoints, eventually
// constant on both tails.
class StepFunction {
 public:
  StepFunction() : interval_values_{Rational(0)} {}
  explicit StepFunction(Rational constant) : interval_values_{std::move(constant)} {
    check();
  }
  StepFunction(std::vector<Rational> breakpoints,
               std::vector<Rational> interval_values,
               std::vector<Rational> point_values);

  std::size_t jump_count() const { return breakpoints_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& interval_values() const {
    return interval_values_;
  }
  const std::vector<Rational>& point_values() const { return point_values_; }
  const Rational& left_tail() const { return interval_values_.front(); }
  const Rational& right_tail() const { return interval_values_.back(); }
  bool is_constant() const { return breakpoints_.empty(); }

  Rational operator()(const Rational& x) const;
  Rational left_limit(const Rational& x) const;
  Rational right_limit(const Rational& x) const;
  Rational max_value() const;
  // index i such that x lies in the closure of piece i = (x_i, x_{i+1})
  // (tail conventions x_0 = -inf, x_{k+1} = +inf); if x is a breakpoint the
  // piece to its right is returned.
  std::size_t piece_right_of(const Rational& x) const;

  Rational integral(const Rational& a, const Rational& b) const;

  StepFunction scaled(const Rational& c) const;
  friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
  bool operator==(const StepFunction&) const = default;

  std::string serialize() const;
  static StepFunction parse(const std::string& text);

 private:
  void check() const;
  void normalize();

  std::vector<Rational> breakpoints_;      // x_1 < ... < x_k
  std::vector<Rational> interval_values_;  // v_0 ... v_k
  std::vector<Rational> point_values_;     // p_1 ... p_k
};

// Paper convention: height on open intervals, height/2 at endpoints, 0 outside.
StepFunction make_indicator(const std::vector<RealInterval>& intervals,
                            const Rational& height);

// Right-continuous variant (value at each breakpoint = value just right of it);
// used by the lattice embedding.
StepFunction make_right_continuous(std::vector<Rational> breakpoints,
                                   std::vector<Rational> interval_values);

// f composed with x -> alpha*x + beta, alpha != 0.
StepFunction affine_pullback(const StepFunction& f, const Rational& alpha,
                             const Rational& beta);

// Exact pointwise variation over I.
Rational variation(const StepFunction& f, const RealInterval& I);

}  // namespace maxvar
