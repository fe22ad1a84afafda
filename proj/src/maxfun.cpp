#include "maxvar/maxfun.hpp"

#include <algorithm>

namespace maxvar {

namespace {

Rational window_avg(const StepFunction& f, const Rational& x, const Rational& r) {
  return f.integral(x - r, x + r) / (Rational(2) * r);
}

// The candidate h_y(x) = (integral over [x-|x-y|, x+|x-y|]) / (2|x-y|) as a
// Mobius function, valid on the largest interval around the sample point m
// on which the far window edge 2x-y stays inside one piece of f.
Mobius anchor_mobius(const StepFunction& f, const Rational& y, const Rational& m) {
  Rational w = m + m - y;  // far window edge at the sample point
  Rational v = f.right_limit(w);
  if (m > y) {
    Rational B = Rational(2) * v;
    Rational Im = f.integral(y, w);
    return {Im - B * m, B, Rational(-2) * y, Rational(2)};
  }
  Rational B = Rational(-2) * v;
  Rational Im = f.integral(w, y);
  return {Im - B * m, B, Rational(2) * y, Rational(-2)};
}

// The boundary candidate r = a + x: window [-a, 2x+a].
Mobius boundary_mobius(const StepFunction& f, const Rational& a,
                       const Rational& m) {
  Rational w = Rational(2) * m + a;
  Rational B = Rational(2) * f.right_limit(w);
  Rational Im = f.integral(-a, w);
  return {Im - B * m, B, Rational(2) * a, Rational(2)};
}

struct Cand {
  Mobius fn;
  int rank;  // 0 = jump anchor, 1 = boundary radius, 2 = tail limit
  Rational key_abs, key;
};

bool key_less(const Cand& a, const Cand& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.key_abs != b.key_abs) return a.key_abs < b.key_abs;
  return a.key < b.key;
}

void push_cand(std::vector<Cand>& cands, Cand c) {
  for (auto& o : cands) {
    if (o.fn.same_function(c.fn)) {
      if (key_less(c, o)) o = std::move(c);
      return;
    }
  }
  cands.push_back(std::move(c));
}

void append_piece(PiecewiseMobius& env, MobiusPiece p) {
  if (!env.pieces.empty()) {
    auto& last = env.pieces.back();
    if (last.fn.same_function(p.fn) && cmp(last.hi, p.lo) == 0) {
      last.hi = p.hi;
      return;
    }
  }
  env.pieces.push_back(std::move(p));
}

Rational half_tail_limit(const StepFunction& f) {
  return (f.left_tail() + f.right_tail()) / Rational(2);
}

}  // namespace

Rational mf_limit_left(const StepFunction& f) {
  return max(f.left_tail(), half_tail_limit(f));
}

Rational mf_limit_right(const StepFunction& f) {
  return max(f.right_tail(), half_tail_limit(f));
}

Rational eval_op(const StepFunction& f, const Rational& x, MaxOp op,
                 const Rational& a) {
  Rational R = a + x;
  if (op != MaxOp::Full && R.sign() <= 0)
    throw std::invalid_argument("a + x must be positive");
  std::vector<Rational> radii;
  for (const auto& y : f.breakpoints()) {
    Rational r = abs(x - y);
    if (r.is_zero()) continue;
    if (op == MaxOp::Small && R < r) continue;
    if (op == MaxOp::Large && r < R) continue;
    radii.push_back(std::move(r));
  }
  if (op != MaxOp::Full) radii.push_back(R);
  bool have = false;
  Rational best(0);
  auto consider = [&](const Rational& v) {
    if (!have || best < v) {
      best = v;
      have = true;
    }
  };
  if (op != MaxOp::Small) consider(half_tail_limit(f));
  for (const auto& r : radii) consider(window_avg(f, x, r));
  return best;  // radii nonempty for Small; otherwise the limit seeds it
}

Rational eval_mf(const StepFunction& f, const Rational& x) {
  return eval_op(f, x, MaxOp::Full, Rational(0));
}
Rational m0_eval(const StepFunction& f, const Rational& x, const Rational& a) {
  return eval_op(f, x, MaxOp::Small, a);
}
Rational m1_eval(const StepFunction& f, const Rational& x, const Rational& a) {
  return eval_op(f, x, MaxOp::Large, a);
}

PiecewiseMobius build_envelope(const StepFunction& f, const Rational& lo,
                               const Rational& hi, MaxOp op, const Rational& a) {
  if (hi < lo) throw std::invalid_argument("envelope bounds out of order");
  if (op != MaxOp::Full && (a.sign() <= 0 || lo.sign() < 0))
    throw std::invalid_argument("auxiliary envelope needs a > 0 and lo >= 0");
  PiecewiseMobius env;
  if (lo == hi) {
    QuadraticValue t{lo};
    env.pieces.push_back(
        {Mobius::constant(eval_op(f, lo, op, a)), t, t, std::nullopt});
    return env;
  }
  const auto& bp = f.breakpoints();
  std::vector<Rational> refs{lo, hi};
  for (std::size_t i = 0; i < bp.size(); ++i) {
    refs.push_back(bp[i]);
    for (std::size_t j = i + 1; j < bp.size(); ++j)
      refs.push_back((bp[i] + bp[j]) / Rational(2));
    if (op != MaxOp::Full) refs.push_back((bp[i] - a) / Rational(2));
  }
  std::erase_if(refs, [&](const Rational& t) { return t < lo || hi < t; });
  std::sort(refs.begin(), refs.end());
  refs.erase(std::unique(refs.begin(), refs.end()), refs.end());

  for (std::size_t s = 0; s + 1 < refs.size(); ++s) {
    const Rational& l = refs[s];
    const Rational& r = refs[s + 1];
    Rational m = (l + r) / Rational(2);

    std::vector<Cand> cands;
    if (op == MaxOp::Full) {
      for (const auto& y : bp)
        push_cand(cands, {anchor_mobius(f, y, m), 0, abs(y), y});
      Rational tail = half_tail_limit(f);
      if (tail.sign() > 0 || cands.empty())
        push_cand(cands,
                  {Mobius::constant(f.is_constant() ? f.left_tail() : tail), 2,
                   Rational(0), Rational(0)});
    } else {
      Rational R = a + m;
      for (const auto& y : bp) {
        Rational r_y = abs(m - y);
        bool active = op == MaxOp::Small ? !(R < r_y) : !(r_y < R);
        if (active) push_cand(cands, {anchor_mobius(f, y, m), 0, abs(y), y});
      }
      push_cand(cands, {boundary_mobius(f, a, m), 1, a, -a});
      if (op == MaxOp::Large)
        push_cand(cands,
                  {Mobius::constant(half_tail_limit(f)), 2, Rational(0),
                   Rational(0)});
    }

    std::vector<QuadraticValue> nodes;
    QuadraticValue ql{l}, qr{r};
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        bool identical = false;
        for (auto& root : mobius_crossings(cands[i].fn, cands[j].fn, identical)) {
          if (cmp(ql, root) < 0 && cmp(root, qr) < 0)
            nodes.push_back(std::move(root));
        }
      }
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const QuadraticValue& x, const QuadraticValue& y) {
                return cmp(x, y) < 0;
              });
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](const QuadraticValue& x, const QuadraticValue& y) {
                              return cmp(x, y) == 0;
                            }),
                nodes.end());

    std::vector<QuadraticValue> ends;
    ends.push_back(ql);
    for (auto& n : nodes) ends.push_back(std::move(n));
    ends.push_back(qr);
    for (std::size_t g = 0; g + 1 < ends.size(); ++g) {
      Rational t = rational_between(ends[g], ends[g + 1]);
      const Cand* best = nullptr;
      Rational best_val(0);
      for (const auto& c : cands) {
        Rational v = c.fn(t);
        if (!best || best_val < v || (best_val == v && key_less(c, *best))) {
          best = &c;
          best_val = v;
        }
      }
      append_piece(env, {best->fn, ends[g], ends[g + 1],
                         best->rank == 0 ? std::optional<Rational>(best->key)
                                         : std::nullopt});
    }
  }
  return env;
}

PiecewiseMobius envelope(const StepFunction& f, const RealInterval& I) {
  if (!I.bounded())
    throw std::invalid_argument("envelope needs a bounded interval");
  return build_envelope(f, *I.lo, *I.hi, MaxOp::Full, Rational(0));
}

std::vector<PiecewiseMobius> candidates(const StepFunction& f,
                                        const RealInterval& I) {
  if (!I.bounded())
    throw std::invalid_argument("candidates needs a bounded interval");
  const Rational& lo = *I.lo;
  const Rational& hi = *I.hi;
  const auto& bp = f.breakpoints();
  std::vector<PiecewiseMobius> result;
  for (const auto& y : bp) {
    PiecewiseMobius pm;
    if (lo == hi) {
      QuadraticValue t{lo};
      Mobius fn = lo == y
                      ? Mobius::constant((f.left_limit(y) + f.right_limit(y)) /
                                         Rational(2))
                      : anchor_mobius(f, y, lo);
      pm.pieces.push_back({fn, t, t, y});
      result.push_back(std::move(pm));
      continue;
    }
    std::vector<Rational> refs{lo, hi, y};
    for (const auto& z : bp)
      if (!(z == y)) refs.push_back((y + z) / Rational(2));
    std::erase_if(refs, [&](const Rational& t) { return t < lo || hi < t; });
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    for (std::size_t s = 0; s + 1 < refs.size(); ++s) {
      Rational m = (refs[s] + refs[s + 1]) / Rational(2);
      append_piece(pm, {anchor_mobius(f, y, m), QuadraticValue{refs[s]},
                        QuadraticValue{refs[s + 1]}, y});
    }
    result.push_back(std::move(pm));
  }
  if (half_tail_limit(f).sign() > 0) {
    PiecewiseMobius pm;
    pm.pieces.push_back({Mobius::constant(half_tail_limit(f)),
                         QuadraticValue{lo}, QuadraticValue{hi}, std::nullopt});
    result.push_back(std::move(pm));
  }
  return result;
}

AlgebraicSum variation_envelope(
    const PiecewiseMobius& env,
    const std::function<Rational(const Rational&)>& true_eval, bool closed_lo,
    bool closed_hi) {
  AlgebraicSum sum;
  const auto& pieces = env.pieces;
  for (const auto& p : pieces) sum.add_abs_diff(p.fn(p.hi), p.fn(p.lo));
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const QuadraticValue& t = pieces[i].hi;
    QuadraticValue L = pieces[i].fn(t);
    QuadraticValue R = pieces[i + 1].fn(t);
    if (t.is_rational()) {
      QuadraticValue V{true_eval(t.rational())};
      sum.add_abs_diff(L, V);
      sum.add_abs_diff(V, R);
    } else if (cmp(L, R) != 0) {
      throw std::logic_error("envelope jump at irrational node");
    }
  }
  if (closed_lo) {
    const QuadraticValue& t = env.lo();
    sum.add_abs_diff(QuadraticValue{true_eval(t.rational())},
                     pieces.front().fn(t));
  }
  if (closed_hi) {
    const QuadraticValue& t = env.hi();
    sum.add_abs_diff(pieces.back().fn(t), QuadraticValue{true_eval(t.rational())});
  }
  return sum;
}

Rational clear_abscissa(const StepFunction& f, bool right) {
  const auto& bp = f.breakpoints();
  if (bp.empty()) return Rational(right ? 1 : -1);
  Rational span = bp.back() - bp.front();
  Rational base = right ? bp.back() + span + Rational(1)
                        : bp.front() - span - Rational(1);
  Rational m = right ? base + Rational(1) : base - Rational(1);
  std::vector<Mobius> fns;
  for (const auto& y : bp) fns.push_back(anchor_mobius(f, y, m));
  fns.push_back(Mobius::constant(half_tail_limit(f)));
  Rational M = max(abs(base), abs(bp.back()));
  M = max(M, abs(bp.front()));
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = i + 1; j < fns.size(); ++j) {
      bool identical = false;
      for (const auto& root : mobius_crossings(fns[i], fns[j], identical)) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), root.d.get_mpz_t());
        Rational bound = abs(root.p) + abs(root.q) * Rational(mpz_class(s + 1));
        M = max(M, bound);
      }
    }
  }
  M += 1;
  return right ? M : -M;
}

AlgebraicSum variation_mf(const StepFunction& f, const RealInterval& I) {
  if (I.degenerate()) return {};
  auto ev = [&f](const Rational& x) { return eval_mf(f, x); };
  if (I.bounded()) {
    auto env = build_envelope(f, *I.lo, *I.hi, MaxOp::Full, Rational(0));
    return variation_envelope(env, ev, I.lo_closed, I.hi_closed);
  }
  if (f.is_constant()) return {};
  Rational lo2 = I.lo ? *I.lo : clear_abscissa(f, false);
  Rational hi2 = I.hi ? *I.hi : clear_abscissa(f, true);
  if (!(lo2 < hi2)) {
    if (!I.lo)
      lo2 = hi2 - Rational(1);
    else
      hi2 = lo2 + Rational(1);
  }
  auto env = build_envelope(f, lo2, hi2, MaxOp::Full, Rational(0));
  AlgebraicSum total = variation_envelope(env, ev, I.lo ? I.lo_closed : true,
                                          I.hi ? I.hi_closed : true);
  if (!I.lo)
    total.add_abs_diff(QuadraticValue{eval_mf(f, lo2)},
                       QuadraticValue{mf_limit_left(f)});
  if (!I.hi)
    total.add_abs_diff(QuadraticValue{eval_mf(f, hi2)},
                       QuadraticValue{mf_limit_right(f)});
  return total;
}

bool envelope_monotone(const PiecewiseMobius& env, int dir,
                       const std::function<Rational(const Rational&)>& true_eval) {
  const auto& pieces = env.pieces;
  for (const auto& p : pieces) {
    if (cmp(p.lo, p.hi) == 0) continue;
    if (p.fn.slope_sign() * dir < 0) return false;
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const QuadraticValue& t = pieces[i].hi;
    QuadraticValue L = pieces[i].fn(t);
    QuadraticValue R = pieces[i + 1].fn(t);
    if (t.is_rational()) {
      QuadraticValue V{true_eval(t.rational())};
      if (dir > 0 && (cmp(L, V) > 0 || cmp(V, R) > 0)) return false;
      if (dir < 0 && (cmp(L, V) < 0 || cmp(V, R) < 0)) return false;
    } else if (cmp(L, R) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<AlgebraicInterval> attachment_set(const StepFunction& f,
                                              const RealInterval& I) {
  if (!I.bounded())
    throw std::invalid_argument("attachment_set needs a bounded interval");
  const Rational& lo = *I.lo;
  const Rational& hi = *I.hi;
  std::vector<AlgebraicInterval> items;
  auto add_point = [&](QuadraticValue x) {
    items.push_back({x, x, true, true});
  };

  std::vector<Rational> pts{lo, hi};
  for (const auto& y : f.breakpoints())
    if (!(y < lo) && !(hi < y)) pts.push_back(y);
  for (const auto& x : pts)
    if (eval_mf(f, x) == f(x)) add_point(QuadraticValue{x});

  if (lo < hi) {
    auto env = build_envelope(f, lo, hi, MaxOp::Full, Rational(0));
    const auto& bp = f.breakpoints();
    const auto& iv = f.interval_values();
    for (std::size_t i = 0; i < iv.size(); ++i) {
      Rational A = i == 0 ? lo : max(lo, bp[i - 1]);
      Rational B = i == bp.size() ? hi : min(hi, bp[i]);
      if (!(A < B)) continue;
      const Rational& v = iv[i];
      QuadraticValue qa{A}, qb{B};
      for (const auto& p : env.pieces) {
        QuadraticValue olo = cmp(p.lo, qa) > 0 ? p.lo : qa;
        QuadraticValue ohi = cmp(p.hi, qb) < 0 ? p.hi : qb;
        if (cmp(olo, ohi) > 0) continue;
        Rational na = p.fn.a - v * p.fn.c;
        Rational nb = p.fn.b - v * p.fn.d;
        if (na.is_zero() && nb.is_zero()) {
          bool lo_open = cmp(olo, qa) == 0;  // region endpoints handled as points
          bool hi_open = cmp(ohi, qb) == 0;
          if (cmp(olo, ohi) == 0 && (lo_open || hi_open)) continue;
          items.push_back({olo, ohi, !lo_open, !hi_open});
        } else if (!nb.is_zero()) {
          Rational x0 = -na / nb;
          if (A < x0 && x0 < B) {
            QuadraticValue qx{x0};
            if (cmp(qx, olo) >= 0 && cmp(qx, ohi) <= 0) add_point(qx);
          }
        }
      }
    }
  }

  std::sort(items.begin(), items.end(),
            [](const AlgebraicInterval& a, const AlgebraicInterval& b) {
              int c = cmp(a.lo, b.lo);
              if (c != 0) return c < 0;
              return cmp(a.hi, b.hi) < 0;
            });
  std::vector<AlgebraicInterval> merged;
  for (auto& it : items) {
    if (!merged.empty()) {
      auto& cur = merged.back();
      int c = cmp(it.lo, cur.hi);
      if (c < 0 || (c == 0 && (cur.hi_closed || it.lo_closed))) {
        int ch = cmp(it.hi, cur.hi);
        if (ch > 0) {
          cur.hi = it.hi;
          cur.hi_closed = it.hi_closed;
        } else if (ch == 0) {
          cur.hi_closed = cur.hi_closed || it.hi_closed;
        }
        if (cmp(it.lo, cur.lo) == 0) cur.lo_closed = cur.lo_closed || it.lo_closed;
        continue;
      }
    }
    merged.push_back(std::move(it));
  }
  return merged;
}

StepFunction canonical_representative(const StepFunction& f) {
  if (f.is_constant()) return f;
  const auto& bp = f.breakpoints();
  const auto& iv = f.interval_values();
  std::size_t k = bp.size();
  auto const_value_on = [&](const Rational& a, const Rational& b) -> Rational {
    auto env = build_envelope(f, a, b, MaxOp::Full, Rational(0));
    Rational w = eval_mf(f, (a + b) / Rational(2));
    Mobius cw = Mobius::constant(w);
    for (const auto& p : env.pieces)
      if (!p.fn.same_function(cw))
        throw std::runtime_error("non-step representative");
    return w;
  };
  std::vector<Rational> values(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    if (iv[i].is_zero()) {
      values[i] = Rational(0);
      continue;
    }
    if (i == 0 || i == k) {
      bool left = i == 0;
      Rational X = clear_abscissa(f, !left);
      Rational edge = left ? bp.front() : bp.back();
      Rational w = left ? const_value_on(min(X, edge - Rational(1)), edge)
                        : const_value_on(edge, max(X, edge + Rational(1)));
      Rational lim = left ? mf_limit_left(f) : mf_limit_right(f);
      if (!(w == lim)) throw std::runtime_error("non-step representative");
      values[i] = w;
    } else {
      values[i] = const_value_on(bp[i - 1], bp[i]);
    }
  }
  std::vector<Rational> pvals(k);
  for (std::size_t i = 0; i < k; ++i) {
    pvals[i] = (iv[i].is_zero() && iv[i + 1].is_zero()) ? Rational(0)
                                                        : eval_mf(f, bp[i]);
  }
  return StepFunction(bp, std::move(values), std::move(pvals));
}

}  // namespace maxvar
