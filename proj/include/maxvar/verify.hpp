#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "maxvar/lattice.hpp"
#include "maxvar/maxfun.hpp"

namespace maxvar {

enum class Verdict { Holds, HoldsWithEquality, Violation };

struct VerificationReport {
  std::string instance;
  Rational var_f;
  AlgebraicSum var_mf;
  Verdict verdict = Verdict::Holds;
  bool equality_predicted = false;
  int comparison_precision_used = 0;

  std::string line() const;
};

// Witnesses where "f = 0 or f = Mf" fails (piece representatives / sites).
struct HypothesisCheck {
  bool admissible = true;
  std::vector<Rational> witnesses;
};

struct HypothesisError : std::runtime_error {
  HypothesisCheck check;
  explicit HypothesisError(HypothesisCheck c);
};

HypothesisCheck check_hypothesis(const StepFunction& f);
HypothesisCheck check_hypothesis(const LatticeFunction& f);

// Structural equality characterization, independent of variation values:
// constant, or zero tails with support a single interval of positive length
// and every point value between its one-sided neighbours.
bool predict_equality(const StepFunction& f);
bool predict_equality(const LatticeFunction& f);

// var(Mf) <= var(f) over the whole line, with certified verdict.  Throws
// HypothesisError when f is inadmissible and PrecisionExhausted when the
// comparison budget runs out.
VerificationReport check_continuous(const StepFunction& f);
VerificationReport check_discrete(const LatticeFunction& f);

// Exact var over all lattice sites of the discrete maximal function.
Rational discrete_var_mf(const LatticeFunction& f);

struct LocalBoundReport {
  bool holds = true;
  Rational var_f;
  AlgebraicSum var_mf;
  int comparison_precision_used = 0;
  std::string line() const;
};

// var_{[a,b]}(Mf) vs var_{[a,b]}(f) between two attachment points a < b.
LocalBoundReport check_local_bound(const StepFunction& f, const Rational& a,
                                   const Rational& b);

struct HalfLineReport {
  bool holds = true;        // part (1) bounds, or part (2) monotone + identity
  bool strict = false;      // part (1) only, when f is not a.e. zero
  AlgebraicSum var_first;   // left-half variation, or ray variation
  AlgebraicSum var_second;  // right-half variation (bounded case)
  Rational bound_first;     // Mf(a)
  Rational bound_second;    // Mf(b), or inf Mf on the ray
};

// For f vanishing a.e. on I.  Bounded I = [a,b]: certifies
// var_{[a,mid]}(Mf) <= Mf(a) and var_{[mid,b]}(Mf) <= Mf(b), strictly unless
// f is a.e. zero.  Half-infinite I: certifies that Mf is monotone on I and
// that its variation there equals Mf(endpoint) - inf Mf.
HalfLineReport check_prop_abcd(const StepFunction& f, const RealInterval& I);

// Deterministic instance generation (raw engine outputs only, so streams are
// reproducible across platforms).
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  long long uniform(long long n);          // [0, n)
  Rational rational(long range, long max_den);  // [-range, range]

  // Disjoint rational intervals with denominators <= max_den, height 1.
  StepFunction indicator(int min_intervals, int max_intervals,
                         long max_den = 100);
  // c > 0 times an indicator; satisfies the attachment hypothesis exactly.
  StepFunction single_height(int min_intervals, int max_intervals);
  // Zero tails, breakpoints on the grid (1/den)Z; arbitrary heights.
  StepFunction grid_step(int max_jumps, long den);
  // Indicator supported outside (-c, c).
  StepFunction vanishing_outside(const Rational& c, int max_intervals);

  // Integer-lattice function, arbitrary nonnegative values and tails.
  LatticeFunction arbitrary_lattice(int max_sites);
  // Rejection sampling against the exact hypothesis check; proposals mix
  // single-height patterns (always admissible) with multi-height attempts.
  LatticeFunction admissible_lattice(int max_sites, int budget = 10000);
  // Lattice function on offset lattice, vanishing on (-a, a), zero tails.
  LatticeFunction lattice_vanishing(int offset, HalfInt a, int extra_sites);

 private:
  std::mt19937_64 rng_;
};

struct SuiteSummary {
  std::string name;
  long long count = 0;
  long long violations = 0;
  long long equality_cases = 0;
  long long undecided = 0;
  long long failures = 0;
  std::string witness;  // first offending instance, if any

  bool ok() const { return !violations && !undecided && !failures; }
  std::string line() const;
};

// Random-instance theorem suites; report lines go to out when non-null.
SuiteSummary run_continuous_suite(std::uint64_t seed, int count,
                                  std::ostream* out = nullptr);
SuiteSummary run_discrete_suite(std::uint64_t seed, int count,
                                std::ostream* out = nullptr);
// Exact lemma property checks (gradient bounds, M0 monotonicity, M1 variation
// bounds, var-of-max, half-line monotonicity).
SuiteSummary run_lemma_suite(std::uint64_t seed, int count,
                             std::ostream* out = nullptr);

struct SweepSummary {
  long long instances = 0;
  long long violations = 0;
  long long equality_cases = 0;
  long long equality_mismatches = 0;
  std::string line() const;
};

// All 0/1 functions on {-N..N} with zero tails; exact var(Mf) <= var(f) and
// the equality characterization (empty or interval support).
SweepSummary exhaustive_discrete_sweep(int N);

}  // namespace maxvar
