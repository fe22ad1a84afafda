#include "maxvar/format.hpp"

namespace maxvar {

namespace {

mpz_class pow10z(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// floor(log10(x)) for x > 0
long decimal_exponent(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 10));
  // e is within a couple of units of the truth; fix by comparison
  auto pow10r = [](long k) {
    return k >= 0 ? Rational(pow10z(k)) : Rational(1) / Rational(pow10z(-k));
  };
  while (pow10r(e) > x) --e;
  while (pow10r(e + 1) <= x) ++e;
  return e;
}

mpz_class round_half_even(const mpz_class& N, const mpz_class& D) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), N.get_mpz_t(), D.get_mpz_t());
  mpz_class two_r = 2 * r;
  int c = ::cmp(two_r, D);
  if (c < 0) return q;
  if (c > 0) return q + 1;
  return mpz_even_p(q.get_mpz_t()) ? q : q + 1;
}

std::string place_digits(const std::string& digits, long e, bool neg) {
  long sig = static_cast<long>(digits.size());
  std::string out;
  if (e >= sig - 1) {
    out = digits + std::string(e - sig + 1, '0');
  } else if (e >= 0) {
    out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

}  // namespace

std::string to_decimal(const Rational& x, int sig) {
  if (x.is_zero()) return "0";
  bool neg = x.sign() < 0;
  Rational a = x.abs();
  long e = decimal_exponent(a);
  long scale = sig - 1 - e;
  mpz_class N = a.num(), D = a.den();
  if (scale >= 0)
    N *= pow10z(scale);
  else
    D *= pow10z(-scale);
  mpz_class m = round_half_even(N, D);
  std::string digits = m.get_str();
  if (static_cast<long>(digits.size()) > sig) {
    // rounding carried into a new leading digit
    digits = digits.substr(0, sig);
    ++e;
  }
  return place_digits(digits, e, neg);
}

std::string to_decimal(const AlgebraicSum& x, int sig) {
  if (x.is_rational()) return to_decimal(x.rational_part(), sig);
  for (int bits = 96; bits <= 1 << 16; bits *= 2) {
    CertifiedInterval e = x.enclose(bits);
    std::string a = to_decimal(e.lo, sig);
    std::string b = to_decimal(e.hi, sig);
    if (a == b) return a;
  }
  return to_decimal(x.enclose(1 << 16).hi, sig);
}

std::string to_decimal(const QuadraticValue& x, int sig) {
  return to_decimal(AlgebraicSum(x), sig);
}

}  // namespace maxvar
