#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxvar/rational.hpp"

namespace maxvar {

struct PrecisionExhausted : std::runtime_error {
  PrecisionExhausted() : std::runtime_error("precision exhausted") {}
};

// p + q*sqrt(d) with d square-free, q == 0 => d == 0.  The constructor
// canonicalizes (extracts square factors of d, folds d in {0,1} into p).
struct QuadraticValue {
  Rational p, q;
  mpz_class d = 0;

  QuadraticValue() = default;
  QuadraticValue(const Rational& r) : p(r) {}
  QuadraticValue(int n) : p(n) {}
  QuadraticValue(const Rational& p_, const Rational& q_, const mpz_class& d_);

  bool is_rational() const { return q.is_zero(); }
  const Rational& rational() const;
  int sign() const;
  double to_double() const;
  std::string str() const;

  QuadraticValue operator-() const { return unchecked(-p, -q, d); }
  friend QuadraticValue operator+(const QuadraticValue& a, const Rational& b) {
    return unchecked(a.p + b, a.q, a.d);
  }
  friend QuadraticValue operator-(const QuadraticValue& a, const Rational& b) {
    return unchecked(a.p - b, a.q, a.d);
  }
  friend QuadraticValue operator*(const QuadraticValue& a, const Rational& b) {
    return b.is_zero() ? QuadraticValue(Rational(0))
                       : unchecked(a.p * b, a.q * b, a.d);
  }

  static QuadraticValue unchecked(Rational p, Rational q, mpz_class d) {
    QuadraticValue v;
    v.p = std::move(p);
    v.q = std::move(q);
    v.d = v.q.is_zero() ? mpz_class(0) : std::move(d);
    return v;
  }
};

// Exact total order across different radicals (sign-aware squaring).
int cmp(const QuadraticValue& a, const QuadraticValue& b);
inline bool operator==(const QuadraticValue& a, const QuadraticValue& b) {
  return cmp(a, b) == 0;
}
inline bool operator<(const QuadraticValue& a, const QuadraticValue& b) {
  return cmp(a, b) < 0;
}

// n = s^2 * d with d square-free; n > 0.
std::pair<mpz_class, mpz_class> square_free_decompose(const mpz_class& n);

// Real roots of A x^2 + B x + C, increasing.  Throws on A == B == C == 0.
std::vector<QuadraticValue> solve_quadratic(const Rational& A, const Rational& B,
                                            const Rational& C);

struct CertifiedInterval {
  Rational lo, hi;
  int precision_bits = 0;
};

// Enclosure of sqrt(d): hi - lo = 2^-k, lo <= sqrt(d) <= hi.
std::pair<Rational, Rational> sqrt_enclosure(const mpz_class& d, int k);

// rational_part + sum of coeff*sqrt(d) over distinct square-free d >= 2.
class AlgebraicSum {
 public:
  AlgebraicSum() = default;
  AlgebraicSum(const Rational& r) : rat_(r) {}
  AlgebraicSum(const QuadraticValue& v) { add(v); }

  void add(const Rational& r) { rat_ += r; }
  void add(const QuadraticValue& v);
  void add(const AlgebraicSum& o);
  void add_abs_diff(const QuadraticValue& a, const QuadraticValue& b);
  AlgebraicSum operator-() const;

  bool is_zero() const { return rat_.is_zero() && irr_.empty(); }
  bool is_rational() const { return irr_.empty(); }
  const Rational& rational_part() const { return rat_; }
  const Rational& as_rational() const;
  std::size_t field_count() const { return irr_.size(); }
  const std::vector<std::pair<Rational, mpz_class>>& terms() const {
    return irr_;
  }

  // Exact sign when <= 2 radicals; otherwise std::nullopt.
  std::optional<int> exact_sign() const;
  CertifiedInterval enclose(int bits) const;
  double to_double() const;
  std::string str() const;

  friend AlgebraicSum operator-(const AlgebraicSum& a, const AlgebraicSum& b) {
    AlgebraicSum r = a;
    r.add(-b);
    return r;
  }

 private:
  Rational rat_;
  std::vector<std::pair<Rational, mpz_class>> irr_;  // sorted by d
};

enum class Ordering { Less, Equal, Greater, Undecided };

int default_precision_bits();  // MAXVAR_PRECISION_BITS or 1024

Ordering compare_sums(const AlgebraicSum& a, const AlgebraicSum& b,
                      int max_bits, int* bits_used);
inline Ordering compare_sums(const AlgebraicSum& a, const AlgebraicSum& b,
                             int max_bits) {
  return compare_sums(a, b, max_bits, nullptr);
}
inline Ordering compare_sums(const AlgebraicSum& a, const AlgebraicSum& b) {
  return compare_sums(a, b, default_precision_bits());
}

// Strictly between a and b (a < b required); used to pick envelope samples.
Rational rational_between(const QuadraticValue& a, const QuadraticValue& b);

}  // namespace maxvar
