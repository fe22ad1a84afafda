#include "maxvar/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace maxvar {

namespace {

// sign of A + B*sqrt(d), d >= 2 square-free (exact; B may be 0).
int sign2(const Rational& A, const Rational& B, const mpz_class& d) {
  int sa = A.sign(), sb = B.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare A^2 vs B^2 d
  Rational diff = A * A - B * B * Rational(d);
  int t = diff.sign();
  if (t == 0) return 0;  // cannot happen for irrational sqrt(d), kept for safety
  return t > 0 ? sa : sb;
}

// sign of A + B*sqrt(d1) + C*sqrt(d2), d1 != d2 both >= 2 square-free,
// B, C nonzero.
int sign3(const Rational& A, const Rational& B, const mpz_class& d1,
          const Rational& C, const mpz_class& d2) {
  // lhs = A + B sqrt(d1), rhs = -C sqrt(d2); want sign(lhs - rhs)
  int sl = sign2(A, B, d1);
  int sr = -C.sign();
  if (sl != sr) {
    if (sl == 0) return -sr;
    if (sr == 0) return sl;
    return sl;  // sl and sr strictly opposite
  }
  // same strict sign s: compare squares
  Rational D1(d1), D2(d2);
  Rational a2 = A * A + B * B * D1 - C * C * D2;
  int t = sign2(a2, Rational(2) * A * B, d1);
  return sl > 0 ? t : -t;
}

}  // namespace

QuadraticValue::QuadraticValue(const Rational& p_, const Rational& q_,
                               const mpz_class& d_)
    : p(p_), q(q_), d(d_) {
  if (d < 0) throw std::domain_error("negative radicand");
  if (q.is_zero() || d == 0) {
    q = Rational(0);
    d = 0;
    return;
  }
  if (d == 1) {
    p += q;
    q = Rational(0);
    d = 0;
    return;
  }
  auto [s, df] = square_free_decompose(d);
  if (df == 1) {
    p += q * Rational(s);
    q = Rational(0);
    d = 0;
  } else {
    q *= Rational(s);
    d = df;
  }
}

const Rational& QuadraticValue::rational() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return p;
}

int QuadraticValue::sign() const {
  if (is_rational()) return p.sign();
  return sign2(p, q, d);
}

double QuadraticValue::to_double() const {
  return p.to_double() + q.to_double() * std::sqrt(d.get_d());
}

std::string QuadraticValue::str() const {
  if (is_rational()) return p.str();
  return p.str() + " + " + q.str() + "*sqrt(" + d.get_str() + ")";
}

int cmp(const QuadraticValue& a, const QuadraticValue& b) {
  Rational dp = a.p - b.p;
  if (a.d == b.d) return sign2(dp, a.q - b.q, a.d == 0 ? mpz_class(2) : a.d);
  if (a.is_rational()) return -sign2(-dp, b.q, b.d);
  if (b.is_rational()) return sign2(dp, a.q, a.d);
  return sign3(dp, a.q, a.d, -b.q, b.d);
}

std::pair<mpz_class, mpz_class> square_free_decompose(const mpz_class& n) {
  if (n <= 0) throw std::invalid_argument("square_free_decompose: n <= 0");
  mpz_class s = 1, d = n;
  mpz_class rem = n;
  // cheap trial division; residual square factors beyond the bound are
  // caught by the perfect-square test below (see decisions ledger)
  for (unsigned long f = 2; f <= 100; ++f) {
    unsigned long f2 = f * f;
    if (mpz_cmp_ui(rem.get_mpz_t(), f2) < 0) break;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), f2)) {
      rem /= f2;
      s *= f;
    }
  }
  // residual may itself be a perfect square (large prime squared)
  if (mpz_perfect_square_p(rem.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
    s *= r;
    rem = 1;
  }
  d = rem;
  return {s, d};
}

std::vector<QuadraticValue> solve_quadratic(const Rational& A, const Rational& B,
                                            const Rational& C) {
  if (A.is_zero() && B.is_zero() && C.is_zero())
    throw std::invalid_argument("identically zero polynomial");
  std::vector<QuadraticValue> roots;
  if (A.is_zero()) {
    if (!B.is_zero()) roots.emplace_back(-C / B);
    return roots;
  }
  Rational disc = B * B - Rational(4) * A * C;
  int s = disc.sign();
  if (s < 0) return roots;
  Rational base = -B / (Rational(2) * A);
  if (s == 0) {
    roots.emplace_back(base);
    return roots;
  }
  // sqrt(n/m) = sqrt(n*m)/m for positive n, m
  mpz_class n = disc.num(), m = disc.den();
  auto [sq, df] = square_free_decompose(n * m);
  Rational mag = Rational(sq) / Rational(m);  // sqrt(disc) = mag * sqrt(df)
  Rational half = mag / (Rational(2) * A.abs());
  if (df == 1) {
    roots.emplace_back(base - half);
    roots.emplace_back(base + half);
  } else {
    roots.push_back(QuadraticValue::unchecked(base, -half, df));
    roots.push_back(QuadraticValue::unchecked(base, half, df));
  }
  return roots;
}

std::pair<Rational, Rational> sqrt_enclosure(const mpz_class& d, int k) {
  if (k < 0) throw std::invalid_argument("negative precision");
  mpz_class n = d;
  n <<= 2 * k;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  mpz_class den = mpz_class(1) << k;
  return {Rational(s) / Rational(den),
          Rational(mpz_class(s + 1)) / Rational(den)};
}

void AlgebraicSum::add(const QuadraticValue& v) {
  rat_ += v.p;
  if (v.q.is_zero()) return;
  auto it = std::lower_bound(
      irr_.begin(), irr_.end(), v.d,
      [](const auto& t, const mpz_class& d) { return t.second < d; });
  if (it != irr_.end() && it->second == v.d) {
    it->first += v.q;
    if (it->first.is_zero()) irr_.erase(it);
  } else {
    irr_.insert(it, {v.q, v.d});
  }
}

void AlgebraicSum::add(const AlgebraicSum& o) {
  rat_ += o.rat_;
  for (const auto& [q, d] : o.irr_)
    add(QuadraticValue::unchecked(Rational(0), q, d));
}

void AlgebraicSum::add_abs_diff(const QuadraticValue& a,
                                const QuadraticValue& b) {
  if (cmp(a, b) >= 0) {
    add(a);
    add(-b);
  } else {
    add(b);
    add(-a);
  }
}

AlgebraicSum AlgebraicSum::operator-() const {
  AlgebraicSum r;
  r.rat_ = -rat_;
  r.irr_ = irr_;
  for (auto& [q, d] : r.irr_) q = -q;
  return r;
}

const Rational& AlgebraicSum::as_rational() const {
  if (!irr_.empty()) throw std::logic_error("sum is not rational");
  return rat_;
}

std::optional<int> AlgebraicSum::exact_sign() const {
  if (irr_.empty()) return rat_.sign();
  if (irr_.size() == 1) return sign2(rat_, irr_[0].first, irr_[0].second);
  if (irr_.size() == 2)
    return sign3(rat_, irr_[0].first, irr_[0].second, irr_[1].first,
                 irr_[1].second);
  return std::nullopt;
}

CertifiedInterval AlgebraicSum::enclose(int bits) const {
  Rational lo = rat_, hi = rat_;
  int t = static_cast<int>(irr_.size());
  for (const auto& [q, d] : irr_) {
    // pad so each term's error stays below 2^-bits / t
    int pad = bits + 2 + t;
    mpz_class qn = q.num();
    pad += static_cast<int>(mpz_sizeinbase(qn.get_mpz_t(), 2));
    auto [slo, shi] = sqrt_enclosure(d, pad);
    if (q.sign() >= 0) {
      lo += q * slo;
      hi += q * shi;
    } else {
      lo += q * shi;
      hi += q * slo;
    }
  }
  return {lo, hi, bits};
}

double AlgebraicSum::to_double() const {
  double r = rat_.to_double();
  for (const auto& [q, d] : irr_) r += q.to_double() * std::sqrt(d.get_d());
  return r;
}

std::string AlgebraicSum::str() const {
  if (irr_.empty()) return rat_.str();
  std::string s = rat_.str();
  for (const auto& [q, d] : irr_)
    s += " + " + q.str() + "*sqrt(" + d.get_str() + ")";
  return s;
}

int default_precision_bits() {
  static int bits = [] {
    const char* env = std::getenv("MAXVAR_PRECISION_BITS");
    if (env) {
      int v = std::atoi(env);
      if (v >= 16) return v;
    }
    return 1024;
  }();
  return bits;
}

Ordering compare_sums(const AlgebraicSum& a, const AlgebraicSum& b,
                      int max_bits, int* bits_used) {
  if (max_bits < 16) throw std::invalid_argument("max_bits < 16");
  AlgebraicSum diff = a - b;
  if (bits_used) *bits_used = 0;
  if (diff.is_zero()) return Ordering::Equal;
  if (auto s = diff.exact_sign()) {
    if (*s == 0) return Ordering::Equal;
    return *s > 0 ? Ordering::Greater : Ordering::Less;
  }
  int bits = 32;
  for (;;) {
    if (bits > max_bits) bits = max_bits;
    CertifiedInterval e = diff.enclose(bits);
    if (bits_used) *bits_used = bits;
    if (e.lo.sign() > 0) return Ordering::Greater;
    if (e.hi.sign() < 0) return Ordering::Less;
    if (bits == max_bits) return Ordering::Undecided;
    bits *= 2;
  }
}

Rational rational_between(const QuadraticValue& a, const QuadraticValue& b) {
  if (a.is_rational() && b.is_rational())
    return (a.rational() + b.rational()) / Rational(2);
  AlgebraicSum sa(a), sb(b);
  for (int bits = 32;; bits *= 2) {
    Rational ahi = sa.enclose(bits).hi;
    Rational blo = sb.enclose(bits).lo;
    if (ahi < blo) return (ahi + blo) / Rational(2);
    if (bits > (1 << 24)) throw PrecisionExhausted();
  }
}

}  // namespace maxvar
