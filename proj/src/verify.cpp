#include "maxvar/verify.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace maxvar {

namespace {

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::HoldsWithEquality:
      return "HOLDS_WITH_EQUALITY";
    default:
      return "VIOLATION";
  }
}

}  // namespace

std::string VerificationReport::line() const {
  return std::string("verdict=") + verdict_name(verdict) +
         " var_f=" + var_f.str() + " var_Mf=" + var_mf.str() +
         " equality_predicted=" + (equality_predicted ? "yes" : "no") +
         " bits=" + std::to_string(comparison_precision_used) +
         " instance=" + instance;
}

std::string LocalBoundReport::line() const {
  return std::string(holds ? "HOLDS" : "FAILS") + " var_Mf=" + var_mf.str() +
         " var_f=" + var_f.str();
}

HypothesisError::HypothesisError(HypothesisCheck c)
    : std::runtime_error("hypothesis 'f = 0 or f = Mf' fails near x = " +
                         (c.witnesses.empty() ? std::string("?")
                                              : c.witnesses.front().str())),
      check(std::move(c)) {}

HypothesisCheck check_hypothesis(const StepFunction& f) {
  HypothesisCheck out;
  if (f.is_constant()) return out;
  const auto& bp = f.breakpoints();
  const auto& iv = f.interval_values();
  auto env_constant = [&out](const PiecewiseMobius& env, const Rational& v) {
    Mobius cv = Mobius::constant(v);
    for (const auto& pc : env.pieces) {
      if (cmp(pc.lo, pc.hi) == 0 || pc.fn.same_function(cv)) continue;
      out.witnesses.push_back(rational_between(pc.lo, pc.hi));
      return false;
    }
    return true;
  };
  for (std::size_t i = 1; i + 1 < iv.size(); ++i) {
    if (iv[i].is_zero()) continue;
    auto env =
        build_envelope(f, bp[i - 1], bp[i], MaxOp::Full, Rational(0));
    env_constant(env, iv[i]);
  }
  // a tail with value L > 0 needs Mf = L out to infinity: constant envelope
  // up to the crossing-free region plus the matching limit
  for (bool rightside : {false, true}) {
    const Rational& L = rightside ? f.right_tail() : f.left_tail();
    if (L.is_zero()) continue;
    Rational edge = rightside ? bp.back() : bp.front();
    Rational far = rightside ? max(clear_abscissa(f, true), edge + Rational(1))
                             : min(clear_abscissa(f, false), edge - Rational(1));
    auto env = rightside
                   ? build_envelope(f, edge, far, MaxOp::Full, Rational(0))
                   : build_envelope(f, far, edge, MaxOp::Full, Rational(0));
    bool flat = env_constant(env, L);
    Rational lim = rightside ? mf_limit_right(f) : mf_limit_left(f);
    if (flat && lim != L) out.witnesses.push_back(far);
  }
  out.admissible = out.witnesses.empty();
  return out;
}

HypothesisCheck check_hypothesis(const LatticeFunction& f) {
  HypothesisCheck out;
  if (f.is_constant()) return out;
  long long dl = f.window_lo().h, dh;
  if (f.empty_window()) {
    dh = dl;
    dl -= 2;
  } else {
    dh = f.window_hi().h;
  }
  long long span = dh - dl;
  for (long long h = dl - span - 4; h <= dh + span + 4; h += 2) {
    HalfInt n{h};
    Rational v = f(n);
    if (!v.is_zero() && v != discrete_mf(f, n))
      out.witnesses.push_back(n.to_rational());
  }
  out.admissible = out.witnesses.empty();
  return out;
}

bool predict_equality(const StepFunction& f) {
  if (f.is_constant()) return true;
  const auto& iv = f.interval_values();
  if (!f.left_tail().is_zero() || !f.right_tail().is_zero()) return false;
  std::size_t first = iv.size(), last = 0;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].sign() <= 0) continue;
    first = std::min(first, i);
    last = i;
  }
  if (first == iv.size()) return false;  // support of measure zero
  for (std::size_t i = first; i <= last; ++i)
    if (iv[i].is_zero()) return false;
  // liminf <= f(x) <= limsup at each jump reads as a one-sided sandwich
  const auto& pv = f.point_values();
  for (std::size_t j = 0; j < pv.size(); ++j) {
    if (pv[j] < min(iv[j], iv[j + 1]) || pv[j] > max(iv[j], iv[j + 1]))
      return false;
  }
  return true;
}

bool predict_equality(const LatticeFunction& f) {
  if (f.is_constant()) return true;
  if (!f.left_tail().is_zero() || !f.right_tail().is_zero()) return false;
  for (const auto& v : f.values())
    if (v.is_zero()) return false;  // gap inside the (trimmed) window
  return !f.values().empty();
}

VerificationReport check_continuous(const StepFunction& f) {
  auto hyp = check_hypothesis(f);
  if (!hyp.admissible) throw HypothesisError(std::move(hyp));
  VerificationReport rep;
  rep.instance = one_line(f.serialize());
  rep.var_f = variation(f, RealInterval::all());
  rep.var_mf = variation_mf(f, RealInterval::all());
  int bits = 0;
  Ordering o = compare_sums(rep.var_mf, AlgebraicSum(rep.var_f),
                            default_precision_bits(), &bits);
  rep.comparison_precision_used = bits;
  rep.equality_predicted = predict_equality(f);
  if (o == Ordering::Undecided) throw PrecisionExhausted();
  rep.verdict = o == Ordering::Greater  ? Verdict::Violation
                : o == Ordering::Equal ? Verdict::HoldsWithEquality
                                       : Verdict::Holds;
  if (rep.verdict != Verdict::Violation &&
      (rep.verdict == Verdict::HoldsWithEquality) != rep.equality_predicted)
    throw std::logic_error("equality characterization mismatch: " +
                           rep.instance);
  return rep;
}

Rational discrete_var_mf(const LatticeFunction& f) {
  if (f.is_constant()) return Rational(0);
  long long dl = f.window_lo().h, dh;
  if (f.empty_window()) {
    dh = dl;
    dl -= 2;
  } else {
    dh = f.window_hi().h;
  }
  long long span = dh - dl;
  std::vector<Rational> m;
  for (long long h = dl - span - 4; h <= dh + span + 4; h += 2)
    m.push_back(discrete_mf(f, HalfInt{h}));
  Rational total(0);
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    total += abs(m[i + 1] - m[i]);
  Rational lim = (f.left_tail() + f.right_tail()) / Rational(2);
  // zero-tail side: Mf runs monotonically from its limit into the window;
  // positive-tail side: Mf must already sit at the tail value
  if (f.left_tail().is_zero())
    total += m.front() - lim;
  else if (m.front() != f.left_tail())
    throw std::logic_error("Mf not settled on the left tail");
  if (f.right_tail().is_zero())
    total += m.back() - lim;
  else if (m.back() != f.right_tail())
    throw std::logic_error("Mf not settled on the right tail");
  return total;
}

VerificationReport check_discrete(const LatticeFunction& f) {
  auto hyp = check_hypothesis(f);
  if (!hyp.admissible) throw HypothesisError(std::move(hyp));
  VerificationReport rep;
  rep.instance = f.serialize();
  rep.var_f = discrete_var(f, DiscreteInterval::all());
  Rational vm = discrete_var_mf(f);
  rep.var_mf = AlgebraicSum(vm);
  rep.equality_predicted = predict_equality(f);
  rep.verdict = vm > rep.var_f    ? Verdict::Violation
                : vm == rep.var_f ? Verdict::HoldsWithEquality
                                  : Verdict::Holds;
  if (rep.verdict != Verdict::Violation &&
      (rep.verdict == Verdict::HoldsWithEquality) != rep.equality_predicted)
    throw std::logic_error("equality characterization mismatch: " +
                           rep.instance);
  return rep;
}

LocalBoundReport check_local_bound(const StepFunction& f, const Rational& a,
                                   const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("need a < b");
  auto att = attachment_set(f, RealInterval::closed(a, b));
  auto attached = [&att](const Rational& x) {
    QuadraticValue q{x};
    for (const auto& p : att) {
      int cl = cmp(p.lo, q), ch = cmp(q, p.hi);
      if ((cl < 0 || (cl == 0 && p.lo_closed)) &&
          (ch < 0 || (ch == 0 && p.hi_closed)))
        return true;
    }
    return false;
  };
  if (!attached(a)) throw std::invalid_argument("a is not an attachment point");
  if (!attached(b)) throw std::invalid_argument("b is not an attachment point");
  LocalBoundReport rep;
  rep.var_f = variation(f, RealInterval::closed(a, b));
  rep.var_mf = variation_mf(f, RealInterval::closed(a, b));
  int bits = 0;
  Ordering o = compare_sums(rep.var_mf, AlgebraicSum(rep.var_f),
                            default_precision_bits(), &bits);
  rep.comparison_precision_used = bits;
  if (o == Ordering::Undecided) throw PrecisionExhausted();
  rep.holds = o != Ordering::Greater;
  return rep;
}

namespace {

// positive-length overlap of piece i of f with the interior of I?
bool overlaps_interior(const StepFunction& f, std::size_t i,
                       const RealInterval& I) {
  const auto& bp = f.breakpoints();
  std::optional<Rational> lo = i == 0 ? std::nullopt
                                      : std::optional<Rational>(bp[i - 1]);
  std::optional<Rational> hi = i == bp.size()
                                   ? std::nullopt
                                   : std::optional<Rational>(bp[i]);
  if (I.lo && (!lo || *lo < *I.lo)) lo = I.lo;
  if (I.hi && (!hi || *I.hi < *hi)) hi = I.hi;
  return !lo || !hi || *lo < *hi;
}

}  // namespace

HalfLineReport check_prop_abcd(const StepFunction& f, const RealInterval& I) {
  const auto& iv = f.interval_values();
  for (std::size_t i = 0; i < iv.size(); ++i)
    if (!iv[i].is_zero() && overlaps_interior(f, i, I))
      throw std::invalid_argument("f does not vanish a.e. on I");
  HalfLineReport rep;
  int bits = default_precision_bits();
  if (I.bounded()) {
    const Rational &a = *I.lo, &b = *I.hi;
    if (!(a < b)) throw std::invalid_argument("degenerate interval");
    Rational mid = (a + b) / Rational(2);
    rep.bound_first = eval_mf(f, a);
    rep.bound_second = eval_mf(f, b);
    rep.var_first = variation_mf(f, RealInterval::closed(a, mid));
    rep.var_second = variation_mf(f, RealInterval::closed(mid, b));
    Ordering o1 = compare_sums(rep.var_first, AlgebraicSum(rep.bound_first), bits);
    Ordering o2 =
        compare_sums(rep.var_second, AlgebraicSum(rep.bound_second), bits);
    if (o1 == Ordering::Undecided || o2 == Ordering::Undecided)
      throw PrecisionExhausted();
    rep.holds = o1 != Ordering::Greater && o2 != Ordering::Greater;
    bool ae_zero = true;
    for (const auto& v : iv) ae_zero = ae_zero && v.is_zero();
    rep.strict = !ae_zero && o1 == Ordering::Less && o2 == Ordering::Less;
    return rep;
  }
  if (!I.lo && !I.hi)
    throw std::invalid_argument("I must be bounded or a half-line");
  bool rightray = I.lo.has_value();
  Rational edge = rightray ? *I.lo : *I.hi;
  Rational lim = rightray ? mf_limit_right(f) : mf_limit_left(f);
  Rational far = rightray
                     ? max(clear_abscissa(f, true), edge + Rational(1)) + 1
                     : min(clear_abscissa(f, false), edge - Rational(1)) - 1;
  auto env = rightray ? build_envelope(f, edge, far, MaxOp::Full, Rational(0))
                      : build_envelope(f, far, edge, MaxOp::Full, Rational(0));
  auto te = [&f](const Rational& x) { return eval_mf(f, x); };
  // beyond the crossing-free abscissa a single piece runs monotonically to
  // the limit; its value there sits above the limit, fixing the direction
  bool mono = envelope_monotone(env, rightray ? -1 : 1, te) &&
              !(eval_mf(f, far) < lim);
  rep.bound_first = eval_mf(f, edge);
  rep.bound_second = lim;
  rep.var_first = variation_mf(f, I);
  Ordering o = compare_sums(
      rep.var_first, AlgebraicSum(rep.bound_first - rep.bound_second), bits);
  if (o == Ordering::Undecided) throw PrecisionExhausted();
  rep.holds = mono && o == Ordering::Equal;
  return rep;
}

long long Generator::uniform(long long n) {
  if (n <= 1) return 0;
  return static_cast<long long>(raw() % static_cast<std::uint64_t>(n));
}

Rational Generator::rational(long range, long max_den) {
  long long den = 1 + uniform(max_den);
  long long num = uniform(2 * range * den + 1) - range * den;
  return Rational(num, den);
}

StepFunction Generator::indicator(int min_intervals, int max_intervals,
                                  long max_den) {
  int k = min_intervals +
          static_cast<int>(uniform(max_intervals - min_intervals + 1));
  std::set<Rational> pts;
  while (static_cast<int>(pts.size()) < 2 * k) pts.insert(rational(10, max_den));
  std::vector<RealInterval> ivs;
  auto it = pts.begin();
  for (int i = 0; i < k; ++i) {
    Rational a = *it++;
    Rational b = *it++;
    ivs.push_back(RealInterval::closed(std::move(a), std::move(b)));
  }
  return make_indicator(ivs, Rational(1));
}

StepFunction Generator::single_height(int min_intervals, int max_intervals) {
  Rational c(1 + uniform(20), 1 + uniform(12));
  return indicator(min_intervals, max_intervals).scaled(c);
}

StepFunction Generator::grid_step(int max_jumps, long den) {
  int k = 2 + static_cast<int>(uniform(std::max(1, max_jumps - 1)));
  std::set<Rational> pts;
  while (static_cast<int>(pts.size()) < k)
    pts.insert(Rational(uniform(20 * den + 1) - 10 * den, den));
  std::vector<Rational> bp(pts.begin(), pts.end());
  std::vector<Rational> iv, pv;
  iv.push_back(Rational(0));
  for (int i = 1; i < k; ++i) iv.push_back(Rational(uniform(6), 1 + uniform(10)));
  iv.push_back(Rational(0));
  for (int i = 0; i < k; ++i) pv.push_back(Rational(uniform(6), 1 + uniform(10)));
  return StepFunction(std::move(bp), std::move(iv), std::move(pv));
}

StepFunction Generator::vanishing_outside(const Rational& c,
                                          int max_intervals) {
  while (true) {
    int k = 1 + static_cast<int>(uniform(max_intervals));
    std::set<Rational> neg, pos;
    for (int tries = 0; static_cast<int>(neg.size() + pos.size()) < 2 * k &&
                        tries < 100;
         ++tries) {
      Rational mag = c + Rational(1 + uniform(40), 1 + uniform(8));
      if (raw() % 2)
        pos.insert(mag);
      else
        neg.insert(-mag);
    }
    std::vector<RealInterval> ivs;
    auto pair_up = [&ivs](const std::set<Rational>& side) {
      auto it = side.begin();
      for (std::size_t i = 0; i + 1 < side.size(); i += 2) {
        Rational a = *it++;
        Rational b = *it++;
        ivs.push_back(RealInterval::closed(std::move(a), std::move(b)));
      }
    };
    pair_up(neg);
    pair_up(pos);
    if (!ivs.empty()) return make_indicator(ivs, Rational(1));
  }
}

LatticeFunction Generator::arbitrary_lattice(int max_sites) {
  int k = 1 + static_cast<int>(uniform(max_sites));
  long long start = -uniform(5);
  std::vector<Rational> vals;
  for (int i = 0; i < k; ++i) vals.push_back(Rational(uniform(7), 1 + uniform(6)));
  auto tail = [this] {
    return uniform(4) == 0 ? Rational(1 + uniform(3), 1 + uniform(3))
                           : Rational(0);
  };
  return LatticeFunction(0, HalfInt::integer(start), std::move(vals), tail(),
                         tail());
}

LatticeFunction Generator::admissible_lattice(int max_sites, int budget) {
  for (int tries = 0; tries < budget; ++tries) {
    Rational c(1 + uniform(9), 1 + uniform(5));
    int mode = static_cast<int>(uniform(8));
    LatticeFunction cand;
    if (mode == 0) {
      cand = LatticeFunction(c);
    } else {
      Rational d = c * Rational(1 + uniform(3), 1 + uniform(3));
      int k = 1 + static_cast<int>(uniform(max_sites));
      std::vector<Rational> vals;
      for (int i = 0; i < k; ++i) {
        long long pick = uniform(mode == 1 ? 3 : 2);
        vals.push_back(pick == 0 ? Rational(0) : pick == 1 ? c : d);
      }
      cand = LatticeFunction(0, HalfInt::integer(-(k / 2)), std::move(vals),
                             Rational(0), Rational(0));
    }
    if (check_hypothesis(cand).admissible) return cand;
  }
  throw std::runtime_error(
      "admissible-instance sampling exhausted its budget of " +
      std::to_string(budget) + " proposals");
}

LatticeFunction Generator::lattice_vanishing(int offset, HalfInt a,
                                             int extra_sites) {
  long long lo = -a.h - 2 * extra_sites;
  std::vector<Rational> vals;
  for (long long h = lo; h <= a.h + 2 * extra_sites; h += 2)
    vals.push_back(std::llabs(h) < a.h ? Rational(0)
                                       : Rational(uniform(5), 1 + uniform(4)));
  return LatticeFunction(offset, HalfInt{lo}, std::move(vals), Rational(0),
                         Rational(0));
}

std::string SuiteSummary::line() const {
  std::string s = name + ": " + std::to_string(count) + " instances, " +
                  std::to_string(violations) + " violations, " +
                  std::to_string(equality_cases) + " equality cases, " +
                  std::to_string(undecided) + " undecided, " +
                  std::to_string(failures) + " failures";
  if (!witness.empty()) s += "\n  witness: " + witness;
  return s;
}

namespace {

template <class Fn, class Inst>
void run_check(SuiteSummary& s, Inst&& f, Fn&& check, std::ostream* out) {
  ++s.count;
  try {
    VerificationReport r = check(f);
    if (out) *out << r.line() << "\n";
    if (r.verdict == Verdict::Violation) {
      ++s.violations;
      if (s.witness.empty()) s.witness = r.instance;
    } else if (r.verdict == Verdict::HoldsWithEquality) {
      ++s.equality_cases;
    }
  } catch (const PrecisionExhausted&) {
    ++s.undecided;
  } catch (const std::exception& e) {
    ++s.failures;
    if (s.witness.empty()) s.witness = e.what();
  }
}

}  // namespace

SuiteSummary run_continuous_suite(std::uint64_t seed, int count,
                                  std::ostream* out) {
  SuiteSummary s;
  s.name = "continuous";
  Generator gen(seed);
  for (int i = 0; i < count; ++i) {
    StepFunction f =
        i % 2 ? gen.single_height(1, 6) : gen.indicator(1, 6);
    run_check(s, f, [](const StepFunction& g) { return check_continuous(g); },
              out);
  }
  return s;
}

SuiteSummary run_discrete_suite(std::uint64_t seed, int count,
                                std::ostream* out) {
  SuiteSummary s;
  s.name = "discrete";
  Generator gen(seed);
  for (int i = 0; i < count; ++i) {
    LatticeFunction f = gen.admissible_lattice(9);
    run_check(s, f, [](const LatticeFunction& g) { return check_discrete(g); },
              out);
  }
  return s;
}

namespace {

// max over monotone samplings of the sum of absolute consecutive differences
Rational brute_sequence_var(const std::vector<Rational>& v) {
  Rational best(0);
  unsigned L = static_cast<unsigned>(v.size());
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    Rational sum(0), prev(0);
    bool have = false;
    for (unsigned i = 0; i < L; ++i) {
      if (!((mask >> i) & 1)) continue;
      if (have) sum += abs(v[i] - prev);
      prev = v[i];
      have = true;
    }
    if (best < sum) best = sum;
  }
  return best;
}

Rational consecutive_var(const std::vector<Rational>& v) {
  Rational sum(0);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) sum += abs(v[i + 1] - v[i]);
  return sum;
}

}  // namespace

SuiteSummary run_lemma_suite(std::uint64_t seed, int count, std::ostream* out) {
  SuiteSummary s;
  s.name = "lemmas";
  Generator gen(seed);
  auto fail = [&s, out](const std::string& what) {
    ++s.failures;
    if (s.witness.empty()) s.witness = what;
    if (out) *out << "FAIL " << what << "\n";
  };
  Rational one(1);
  for (int i = 0; i < count; ++i) {
    ++s.count;
    StepFunction f = gen.vanishing_outside(one, 2);
    // difference quotient of M1 against M1f(y)/(1+x), cross-multiplied
    long long d1 = 1 + gen.uniform(16), d2 = 1 + gen.uniform(16);
    Rational x(gen.uniform(d1 + 1), d1), y(gen.uniform(d2 + 1), d2);
    if (x != y) {
      Rational m1x = m1_eval(f, x, one), m1y = m1_eval(f, y, one);
      if (!((m1x - m1y) * (one + x) <= abs(x - y) * m1y))
        fail("continuous difference-quotient bound");
    }
    // M0 nondecreasing on [0,1]
    {
      Rational prev = m0_eval(f, Rational(0), one);
      for (int j = 1; j <= 8; ++j) {
        Rational cur = m0_eval(f, Rational(j, 8), one);
        if (cur < prev) {
          fail("continuous M0 monotonicity");
          break;
        }
        prev = cur;
      }
    }
    // var_{[0,1]}(M1 f) <= M1 f(1)
    {
      auto env = build_envelope(f, Rational(0), one, MaxOp::Large, one);
      auto var = variation_envelope(
          env, [&](const Rational& t) { return m1_eval(f, t, one); }, true,
          true);
      Ordering o = compare_sums(var, AlgebraicSum(m1_eval(f, one, one)));
      if (o == Ordering::Greater) fail("continuous M1 variation bound");
      if (o == Ordering::Undecided) ++s.undecided;
    }
    // Mf monotone on a half-line where f vanishes, with the variation identity
    try {
      auto rep = i % 2 ? check_prop_abcd(
                             f, RealInterval::right_ray(f.breakpoints().back()))
                       : check_prop_abcd(
                             f, RealInterval::left_ray(f.breakpoints().front()));
      if (!rep.holds) fail("half-line monotonicity of Mf");
    } catch (const PrecisionExhausted&) {
      ++s.undecided;
    }
    // var(max(g,h)) <= var(h) for nondecreasing g with g(end) <= h(end)
    {
      int L = 3 + static_cast<int>(gen.uniform(7));
      std::vector<Rational> g, h, u;
      Rational acc = gen.rational(3, 6);
      for (int j = 0; j < L; ++j) {
        g.push_back(acc);
        acc += Rational(gen.uniform(5), 1 + gen.uniform(4));
      }
      for (int j = 0; j < L; ++j) h.push_back(gen.rational(4, 6));
      h.back() = g.back() + Rational(gen.uniform(5), 1 + gen.uniform(4));
      for (int j = 0; j < L; ++j) u.push_back(max(g[j], h[j]));
      if (brute_sequence_var(h) != consecutive_var(h))
        fail("brute-force variation disagrees with the telescoped sum");
      if (brute_sequence_var(u) > brute_sequence_var(h))
        fail("variation-of-max bound");
    }
    // discrete lemmas around a vanishing interval (-a, a)
    {
      int off = static_cast<int>(gen.uniform(2));
      HalfInt a{off + 2 * (1 + gen.uniform(3))};
      LatticeFunction lf =
          gen.lattice_vanishing(off, a, 1 + static_cast<int>(gen.uniform(3)));
      std::vector<HalfInt> ss{HalfInt{0}};
      for (long long h = off ? 1 : 2; h <= a.h; h += 2) ss.push_back(HalfInt{h});
      std::vector<Rational> m1v, m0v;
      for (auto n : ss) {
        m1v.push_back(discrete_m1(lf, n, a));
        m0v.push_back(discrete_m0(lf, n, a));
      }
      Rational half_shift(a.h + 1, 2);  // a + 1/2
      for (std::size_t p = 0; p < ss.size(); ++p)
        for (std::size_t q = 0; q < ss.size(); ++q) {
          if (p == q) continue;
          Rational n = ss[p].to_rational(), mm = ss[q].to_rational();
          if (!((m1v[p] - m1v[q]) * (n + half_shift) <= abs(n - mm) * m1v[q])) {
            fail("discrete difference-quotient bound");
            p = ss.size();
            break;
          }
        }
      for (std::size_t p = 0; p + 1 < ss.size(); ++p)
        if (m0v[p + 1] < m0v[p]) {
          fail("discrete M0 monotonicity");
          break;
        }
      Rational bound = Rational(a.h, a.h + 1) * m1v.back();
      if (consecutive_var(m1v) > bound) fail("discrete M1 variation bound");
    }
  }
  return s;
}

std::string SweepSummary::line() const {
  std::string s = std::to_string(instances) + " instances, " +
                  std::to_string(violations) +
                  " violations, equality cases: " +
                  std::to_string(equality_cases);
  if (equality_mismatches)
    s += ", equality mismatches: " + std::to_string(equality_mismatches);
  return s;
}

SweepSummary exhaustive_discrete_sweep(int N) {
  if (N < 0 || N > 20) throw std::invalid_argument("N must be in [0, 20]");
  int W = 2 * N + 1;
  std::uint64_t total = 1ULL << W;
  SweepSummary s;
  std::vector<long long> prefix(W + 1), num(W), den(W);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int runs = 0;
    bool prev = false;
    for (int i = 0; i < W; ++i) {
      bool bit = (mask >> i) & 1;
      prefix[i + 1] = prefix[i] + bit;
      if (bit && !prev) ++runs;
      prev = bit;
    }
    for (int i = 0; i < W; ++i) {
      long long site = i - N;
      long long rmax = 2 * N + std::llabs(site) + 1;
      long long bn = 0, bd = 1;
      for (long long r = 0; r <= rmax; ++r) {
        long long lo = std::max<long long>(-N, site - r);
        long long hi = std::min<long long>(N, site + r);
        long long mass = hi >= lo ? prefix[hi + N + 1] - prefix[lo + N] : 0;
        long long d = 2 * r + 1;
        if (mass * bd > bn * d) {
          bn = mass;
          bd = d;
        }
      }
      num[i] = bn;
      den[i] = bd;
    }
    // zero tails: Mf climbs monotonically from limit 0 outside {-N..N}
    Rational vm(num[0], den[0]);
    vm += Rational(num[W - 1], den[W - 1]);
    for (int i = 0; i + 1 < W; ++i)
      vm += abs(Rational(num[i + 1], den[i + 1]) - Rational(num[i], den[i]));
    Rational vf(2 * runs);
    bool equal = vm == vf;
    bool predicted = mask == 0 || runs == 1;
    ++s.instances;
    if (vm > vf) ++s.violations;
    if (equal) ++s.equality_cases;
    if (equal != predicted) ++s.equality_mismatches;
  }
  return s;
}

}  // namespace maxvar
