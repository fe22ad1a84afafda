#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxvar/rational.hpp"
#include "maxvar/stepfn.hpp"

namespace maxvar {

// Point of the half-integer grid, stored as twice its value so both Z and
// Z + 1/2 (and the adjoined centre 0) use exact integer arithmetic.
struct HalfInt {
  long long h = 0;  // value = h / 2

  static HalfInt integer(long long n) { return {2 * n}; }
  static HalfInt half(long long h2) { return {h2}; }
  Rational to_rational() const { return Rational(h, 2); }
  std::string str() const;
  static HalfInt parse(const std::string& s);

  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
  HalfInt operator+(const HalfInt& o) const { return {h + o.h}; }
  HalfInt operator-(const HalfInt& o) const { return {h - o.h}; }
  HalfInt operator-() const { return {-h}; }
};

// f: S -> Q>=0 with S = Z + offset/2, constant outside a finite window.
class LatticeFunction {
 public:
  LatticeFunction() : left_(0), right_(0) {}
  explicit LatticeFunction(Rational constant)
      : left_(constant), right_(std::move(constant)) {}
  LatticeFunction(int offset, HalfInt start, std::vector<Rational> values,
                  Rational left_tail, Rational right_tail);

  int offset() const { return offset_; }
  bool on_lattice(HalfInt n) const {
    return ((n.h % 2 + 2) % 2) == offset_;
  }
  Rational operator()(HalfInt n) const;

  bool empty_window() const { return values_.empty(); }
  HalfInt window_lo() const { return start_; }
  HalfInt window_hi() const {
    return {start_.h + 2 * (static_cast<long long>(values_.size()) - 1)};
  }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& left_tail() const { return left_; }
  const Rational& right_tail() const { return right_; }
  bool is_constant() const { return values_.empty() && left_ == right_; }
  Rational max_value() const;
  // exact sum of f over lattice sites in [a, b]
  Rational sum_range(HalfInt a, HalfInt b) const;

  std::string serialize() const;  // "offset; left_tail; v_a ... v_b @ a; right_tail"
  static LatticeFunction parse(const std::string& s);
  bool operator==(const LatticeFunction&) const = default;

 private:
  int offset_ = 0;
  HalfInt start_{0};
  std::vector<Rational> values_;
  Rational left_, right_;
};

struct DiscreteInterval {
  std::optional<HalfInt> lo, hi;
  static DiscreteInterval all() { return {}; }
  static DiscreteInterval closed(HalfInt a, HalfInt b) { return {a, b}; }
};

// Exact sup of window averages; n may be any lattice site, or the centre 0
// for the half-integer lattice (windows v .. -v over v in S).
Rational discrete_mf(const LatticeFunction& f, HalfInt n);
// Independent oracle: direct enumeration of window left endpoints down to
// r_max sites below n, plus the analytic tail limit.
Rational brute_mf(const LatticeFunction& f, HalfInt n, long long r_max);

Rational discrete_var(const LatticeFunction& f, const DiscreteInterval& I);

// Restricted operators of the two-sided setting: window left endpoint
// v in (-a, n] for M0, v <= -a for M1 (a in S positive, n in [0, a]).
Rational discrete_m0(const LatticeFunction& f, HalfInt n, HalfInt a);
Rational discrete_m1(const LatticeFunction& f, HalfInt n, HalfInt a);

// Right-continuous embedding f_c of an integer-lattice function.
StepFunction embed_to_step(const LatticeFunction& f);

}  // namespace maxvar
