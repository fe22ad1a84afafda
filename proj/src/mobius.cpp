#include "maxvar/mobius.hpp"

namespace maxvar {

Rational Mobius::operator()(const Rational& x) const {
  Rational den = c + d * x;
  if (den.is_zero()) {
    Rational num = a + b * x;
    if (num.is_zero() && !d.is_zero()) return b / d;
    throw std::domain_error("pole of Mobius function");
  }
  return (a + b * x) / den;
}

QuadraticValue Mobius::operator()(const QuadraticValue& x) const {
  if (x.is_rational()) return QuadraticValue((*this)(x.rational()));
  // numerator (a + b p) + b q sqrt(D); denominator (c + d p) + d q sqrt(D)
  Rational np = a + b * x.p, nq = b * x.q;
  Rational dp = c + d * x.p, dq = d * x.q;
  Rational D(x.d);
  Rational norm = dp * dp - dq * dq * D;
  if (norm.is_zero()) throw std::domain_error("pole of Mobius function");
  // multiply by the conjugate (dp - dq sqrt(D))
  Rational rp = (np * dp - nq * dq * D) / norm;
  Rational rq = (nq * dp - np * dq) / norm;
  return QuadraticValue::unchecked(rp, rq, rq.is_zero() ? 0 : x.d);
}

bool Mobius::same_function(const Mobius& o) const {
  return a * o.c == o.a * c && b * o.d == o.b * d &&
         a * o.d + b * o.c == o.a * d + o.b * c;
}

Mobius Mobius::normalized() const {
  // common denominator of all four coefficients
  mpz_class l = a.den();
  for (const Rational* r : {&b, &c, &d}) {
    mpz_class rd = r->den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rd.get_mpz_t());
  }
  mpz_class an = a.num() * (l / a.den());
  mpz_class bn = b.num() * (l / b.den());
  mpz_class cn = c.num() * (l / c.den());
  mpz_class dn = d.num() * (l / d.den());
  mpz_class g1, g2, g;
  mpz_gcd(g1.get_mpz_t(), an.get_mpz_t(), bn.get_mpz_t());
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), dn.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g1.get_mpz_t(), g2.get_mpz_t());
  if (g == 0) g = 1;
  mpz_class lead = cn != 0 ? cn : dn;
  if (lead < 0) g = -g;
  return {Rational(mpz_class(an / g)), Rational(mpz_class(bn / g)),
          Rational(mpz_class(cn / g)), Rational(mpz_class(dn / g))};
}

std::string Mobius::str() const {
  Mobius n = normalized();
  return "(" + n.a.str() + "," + n.b.str() + "," + n.c.str() + "," +
         n.d.str() + ")";
}

std::vector<QuadraticValue> mobius_crossings(const Mobius& f, const Mobius& g,
                                             bool& identical) {
  Rational A = f.b * g.d - g.b * f.d;
  Rational B = f.a * g.d + f.b * g.c - g.a * f.d - g.b * f.c;
  Rational C = f.a * g.c - g.a * f.c;
  if (A.is_zero() && B.is_zero() && C.is_zero()) {
    identical = true;
    return {};
  }
  identical = false;
  return solve_quadratic(A, B, C);
}

QuadraticValue PiecewiseMobius::eval_sup(const QuadraticValue& x) const {
  bool found = false;
  QuadraticValue best;
  for (const auto& piece : pieces) {
    if (cmp(piece.lo, x) <= 0 && cmp(x, piece.hi) <= 0) {
      QuadraticValue v = piece.fn(x);
      if (!found || cmp(v, best) > 0) best = v;
      found = true;
    }
  }
  if (!found) throw std::domain_error("point outside envelope domain");
  return best;
}

std::vector<QuadraticValue> PiecewiseMobius::breakpoints() const {
  std::vector<QuadraticValue> r;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) r.push_back(pieces[i].hi);
  return r;
}

std::string PiecewiseMobius::serialize() const {
  std::string s;
  for (const auto& piece : pieces) {
    s += piece.fn.str() + " on [" + piece.lo.str() + "," + piece.hi.str() +
         "]\n";
  }
  return s;
}

}  // namespace maxvar
