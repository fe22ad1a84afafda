#pragma once

#include <functional>

#include "maxvar/mobius.hpp"
#include "maxvar/stepfn.hpp"

namespace maxvar {

// Which radius range the supremum runs over: Full = all r > 0,
// Small = r <= a + x, Large = r >= a + x (the auxiliary operators).
enum class MaxOp { Full, Small, Large };

// Exact pointwise values.
Rational eval_mf(const StepFunction& f, const Rational& x);
Rational m0_eval(const StepFunction& f, const Rational& x, const Rational& a);
Rational m1_eval(const StepFunction& f, const Rational& x, const Rational& a);
Rational eval_op(const StepFunction& f, const Rational& x, MaxOp op,
                 const Rational& a);

// limit of Mf(x) as x -> -inf / +inf: max(tail value, (L- + L+)/2)
Rational mf_limit_left(const StepFunction& f);
Rational mf_limit_right(const StepFunction& f);

// One piecewise representation per jump candidate h_y over bounded I, plus a
// constant tail candidate when f has nonzero tails.
std::vector<PiecewiseMobius> candidates(const StepFunction& f,
                                        const RealInterval& I);

// Upper envelope over [lo, hi]; equals the operator pointwise except possibly
// at jump anchors of f (where the true value comes from eval_op).
PiecewiseMobius build_envelope(const StepFunction& f, const Rational& lo,
                               const Rational& hi, MaxOp op, const Rational& a);
PiecewiseMobius envelope(const StepFunction& f, const RealInterval& I);

// Exact pointwise variation of the function represented by env, using
// true_eval for the value at rational nodes (envelope pieces give the
// one-sided limits there).
AlgebraicSum variation_envelope(
    const PiecewiseMobius& env,
    const std::function<Rational(const Rational&)>& true_eval, bool closed_lo,
    bool closed_hi);

AlgebraicSum variation_mf(const StepFunction& f, const RealInterval& I);

// Abscissa beyond which (to the right if right, else to the left) no two
// Mf candidates cross, so a single monotone piece dominates out to infinity.
Rational clear_abscissa(const StepFunction& f, bool right);

// dir = +1 nondecreasing, -1 nonincreasing; exact check of the represented
// function (true node values included).
bool envelope_monotone(const PiecewiseMobius& env, int dir,
                       const std::function<Rational(const Rational&)>& true_eval);

struct AlgebraicInterval {
  QuadraticValue lo, hi;
  bool lo_closed = true;
  bool hi_closed = true;
  bool is_point() const { return lo_closed && hi_closed && cmp(lo, hi) == 0; }
};

// {x in I : Mf(x) = f(x)} as finitely many intervals and points.
std::vector<AlgebraicInterval> attachment_set(const StepFunction& f,
                                              const RealInterval& I);

// f-bar: 0 where both one-sided neighboring values vanish, Mf(x) elsewhere.
// Throws "non-step representative" when Mf is not constant on some positive
// piece (then f-bar is not a step function).
StepFunction canonical_representative(const StepFunction& f);

}  // namespace maxvar
