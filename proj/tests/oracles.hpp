#pragma once

// Independent reference computations used to cross-check the exact library
// code: dense radius grids in double precision and brute-force variation
// over explicit monotone samplings.

#include <algorithm>
#include <cmath>
#include <vector>

#include "maxvar/lattice.hpp"
#include "maxvar/maxfun.hpp"

namespace oracle {

using maxvar::LatticeFunction;
using maxvar::Rational;
using maxvar::StepFunction;

// Lower bound for Mf(x): window averages over the radius grid k/den up to the
// truncation radius span + |x - centre| + 1, plus the tail limit.
inline double dense_mf(const StepFunction& f, const Rational& x,
                       long den = 10000) {
  const auto& bp = f.breakpoints();
  if (bp.empty()) return f.left_tail().to_double();
  const auto& iv = f.interval_values();
  std::vector<double> xs, pref(bp.size(), 0.0);
  for (const auto& b : bp) xs.push_back(b.to_double());
  for (std::size_t i = 1; i < bp.size(); ++i)
    pref[i] = pref[i - 1] + iv[i].to_double() * (xs[i] - xs[i - 1]);
  auto F = [&](double t) {  // integral from xs.front() to t
    if (t <= xs.front()) return iv.front().to_double() * (t - xs.front());
    if (t >= xs.back())
      return pref.back() + iv.back().to_double() * (t - xs.back());
    std::size_t i = std::upper_bound(xs.begin(), xs.end(), t) - xs.begin();
    return pref[i - 1] + iv[i].to_double() * (t - xs[i - 1]);
  };
  double xd = x.to_double();
  double centre = (xs.front() + xs.back()) / 2;
  double R = (xs.back() - xs.front()) + std::fabs(xd - centre) + 1.0;
  double best =
      (f.left_tail().to_double() + f.right_tail().to_double()) / 2;
  long kmax = static_cast<long>(std::ceil(R * den));
  for (long k = 1; k <= kmax; ++k) {
    double r = static_cast<double>(k) / den;
    double avg = (F(xd + r) - F(xd - r)) / (2 * r);
    if (avg > best) best = avg;
  }
  return best;
}

// Exhaustive supremum over monotone samplings of the given points.
inline Rational brute_var_points(const StepFunction& f,
                                 const std::vector<Rational>& pts) {
  unsigned n = static_cast<unsigned>(pts.size());
  Rational best(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Rational sum(0), prev(0);
    bool have = false;
    for (unsigned i = 0; i < n; ++i) {
      if (!((mask >> i) & 1)) continue;
      Rational v = f(pts[i]);
      if (have) sum += abs(v - prev);
      prev = v;
      have = true;
    }
    if (best < sum) best = sum;
  }
  return best;
}

// Sampling points for the variation over [lo, hi]: endpoints, breakpoints,
// and a midpoint inside every open piece.
inline std::vector<Rational> variation_sampling(const StepFunction& f,
                                                const Rational& lo,
                                                const Rational& hi) {
  std::vector<Rational> pts{lo};
  for (const auto& b : f.breakpoints())
    if (lo < b && b < hi) pts.push_back(b);
  pts.push_back(hi);
  std::vector<Rational> full;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    full.push_back(pts[i]);
    if (i + 1 < pts.size())
      full.push_back((pts[i] + pts[i + 1]) / Rational(2));
  }
  return full;
}

// Numeric variation of Mf by dense sampling (lower bound, converges from
// below as n grows).
inline double sampled_var_mf(const StepFunction& f, double lo, double hi,
                             int n) {
  double total = 0, prev = 0;
  bool have = false;
  for (int k = 0; k <= n; ++k) {
    Rational x(static_cast<long long>(std::llround(
                   (lo + (hi - lo) * k / n) * 1000000.0)),
               1000000);
    double v = maxvar::eval_mf(f, x).to_double();
    if (have) total += std::fabs(v - prev);
    prev = v;
    have = true;
  }
  return total;
}

}  // namespace oracle
