#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "maxvar/builtins.hpp"
#include "maxvar/format.hpp"
#include "maxvar/verify.hpp"

namespace {

using namespace maxvar;

struct FunctionArgs {
  std::string builtin;
  std::string file;
  std::string c = "3/2";
};

void add_function_options(CLI::App* cmd, FunctionArgs& args) {
  auto* b = cmd->add_option("--builtin", args.builtin,
                            "example-1-6 | example-1-8 | figure-3");
  auto* f = cmd->add_option("--file", args.file, "step function file");
  cmd->add_option("--c", args.c, "parameter c in (1,3) for example-1-6");
  b->excludes(f);
}

StepFunction load_function(const FunctionArgs& args) {
  if (!args.builtin.empty())
    return builtin_function(args.builtin, Rational::parse(args.c));
  if (args.file.empty())
    throw std::invalid_argument("need --builtin or --file");
  std::ifstream in(args.file);
  if (!in) throw std::invalid_argument("cannot read " + args.file);
  std::stringstream buf;
  buf << in.rdbuf();
  return StepFunction::parse(buf.str());
}

RealInterval plot_interval(const FunctionArgs& args, const StepFunction& f) {
  if (args.builtin == "example-1-6")
    return RealInterval::closed(Rational(-3), Rational(3));
  if (args.builtin == "example-1-8")
    return RealInterval::closed(Rational(-2), Rational(2));
  if (args.builtin == "figure-3")
    return RealInterval::closed(Rational(0), Rational(1));
  if (f.is_constant()) return RealInterval::closed(Rational(-1), Rational(1));
  return RealInterval::closed(f.breakpoints().front() - 1,
                              f.breakpoints().back() + 1);
}

int run_eval(const FunctionArgs& args, const std::string& xs,
             const std::string& op, const std::string& as) {
  StepFunction f = load_function(args);
  Rational x = Rational::parse(xs);
  Rational a = Rational::parse(as);
  Rational v = op == "Mf"   ? eval_mf(f, x)
               : op == "M0" ? m0_eval(f, x, a)
               : op == "M1" ? m1_eval(f, x, a)
                            : throw std::invalid_argument("bad --operator");
  std::cout << v.str() << "\n";
  return 0;
}

int run_var(const FunctionArgs& args, const std::string& ivs,
            const std::string& of) {
  StepFunction f = load_function(args);
  RealInterval I = RealInterval::parse(ivs);
  if (of == "f") {
    std::cout << variation(f, I).str() << "\n";
  } else if (of == "Mf") {
    AlgebraicSum v = variation_mf(f, I);
    std::cout << (v.is_rational() ? v.rational_part().str() : v.str()) << "\n";
  } else {
    throw std::invalid_argument("bad --of");
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int count, int N,
               bool quiet) {
  std::ostream* rep = quiet ? nullptr : &std::cout;
  if (suite == "sweep") {
    SweepSummary s = exhaustive_discrete_sweep(N);
    std::cout << s.line() << "\n";
    return (s.violations || s.equality_mismatches) ? 1 : 0;
  }
  SuiteSummary s = suite == "continuous" ? run_continuous_suite(seed, count, rep)
                   : suite == "discrete" ? run_discrete_suite(seed, count, rep)
                   : suite == "lemmas"
                       ? run_lemma_suite(seed, count, rep)
                       : throw std::invalid_argument("bad --suite");
  std::cout << s.line() << "\n";
  if (s.violations || s.failures) return 1;
  if (s.undecided) return 2;
  return 0;
}

// sample abscissae: uniform grid over I plus the given exact breakpoints
std::vector<QuadraticValue> sample_points(const RealInterval& I, int samples,
                                          const std::vector<QuadraticValue>& bps) {
  std::vector<QuadraticValue> xs;
  const Rational &lo = *I.lo, &hi = *I.hi;
  for (int k = 0; k < samples; ++k)
    xs.emplace_back(lo + (hi - lo) * Rational(k, samples - 1));
  for (const auto& b : bps)
    if (!(cmp(b, QuadraticValue{lo}) < 0) && !(cmp(QuadraticValue{hi}, b) < 0))
      xs.push_back(b);
  std::sort(xs.begin(), xs.end(),
            [](const QuadraticValue& a, const QuadraticValue& b) {
              return cmp(a, b) < 0;
            });
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](const QuadraticValue& a, const QuadraticValue& b) {
                         return cmp(a, b) == 0;
                       }),
           xs.end());
  return xs;
}

void write_rows(const std::string& path,
                const std::vector<std::pair<QuadraticValue, QuadraticValue>>& rows,
                bool exact) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& [x, y] : rows) {
    if (exact)
      out << x.str() << " " << y.str() << "\n";
    else
      out << to_decimal(x) << " " << to_decimal(y) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

// value of the step function at an exact abscissa (irrational points fall
// strictly inside a piece)
QuadraticValue step_at(const StepFunction& f, const QuadraticValue& x) {
  if (x.is_rational()) return QuadraticValue{f(x.rational())};
  const auto& bp = f.breakpoints();
  std::size_t i = 0;
  while (i < bp.size() && cmp(QuadraticValue{bp[i]}, x) < 0) ++i;
  return QuadraticValue{f.interval_values()[i]};
}

int run_figure(const FunctionArgs& args, int samples, const std::string& outdir,
               bool exact) {
  if (samples < 2) throw std::invalid_argument("--samples must be >= 2");
  StepFunction f = load_function(args);
  RealInterval I = plot_interval(args, f);
  std::string stem = !args.builtin.empty() ? args.builtin : "function";
  std::string prefix = outdir.empty() ? stem : outdir + "/" + stem;

  std::vector<QuadraticValue> fb;
  for (const auto& b : f.breakpoints()) fb.emplace_back(b);
  auto fxs = sample_points(I, samples, fb);
  std::vector<std::pair<QuadraticValue, QuadraticValue>> rows;
  for (const auto& x : fxs) rows.emplace_back(x, step_at(f, x));
  write_rows(prefix + "_f.dat", rows, exact);

  auto emit_curve = [&](MaxOp op, const Rational& a, const std::string& tag) {
    PiecewiseMobius env = build_envelope(f, *I.lo, *I.hi, op, a);
    std::vector<QuadraticValue> bps = env.breakpoints();
    for (const auto& b : f.breakpoints()) bps.emplace_back(b);
    auto xs = sample_points(I, samples, bps);
    rows.clear();
    for (const auto& x : xs) {
      QuadraticValue y = x.is_rational()
                             ? QuadraticValue{eval_op(f, x.rational(), op, a)}
                             : env.eval_sup(x);
      rows.emplace_back(x, y);
    }
    write_rows(prefix + "_" + tag + ".dat", rows, exact);
  };
  emit_curve(MaxOp::Full, Rational(0), "Mf");
  if (args.builtin == "figure-3") {
    emit_curve(MaxOp::Small, Rational(1), "M0f");
    emit_curve(MaxOp::Large, Rational(1), "M1f");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact step-function maximal operator toolkit"};
  app.require_subcommand(1);

  FunctionArgs eval_fn, var_fn, fig_fn;
  std::string eval_x = "0", eval_op = "Mf", eval_a = "1";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate Mf / M0f / M1f");
  add_function_options(eval_cmd, eval_fn);
  eval_cmd->add_option("--x", eval_x, "evaluation point");
  eval_cmd->add_option("--operator", eval_op, "Mf | M0 | M1");
  eval_cmd->add_option("--a", eval_a, "radius split for M0/M1");

  std::string var_interval = "R", var_of = "Mf";
  auto* var_cmd = app.add_subcommand("var", "exact variation of f or Mf");
  add_function_options(var_cmd, var_fn);
  var_cmd->add_option("--interval", var_interval, "e.g. [-1,1] or R");
  var_cmd->add_option("--of", var_of, "f | Mf");

  std::string suite = "continuous";
  std::uint64_t seed = 0;
  int count = 100, N = 6;
  bool quiet = false;
  auto* ver_cmd = app.add_subcommand("verify", "run verification suites");
  ver_cmd->add_option("--suite", suite, "continuous | discrete | lemmas | sweep");
  ver_cmd->add_option("--seed", seed, "generator seed");
  ver_cmd->add_option("--count", count, "instances per suite");
  ver_cmd->add_option("--N", N, "sweep half-width");
  ver_cmd->add_flag("--quiet", quiet, "summary only, no per-instance reports");

  int samples = 201;
  std::string outdir = ".";
  bool exact = false;
  auto* fig_cmd = app.add_subcommand("figure", "write plot data files");
  add_function_options(fig_cmd, fig_fn);
  fig_cmd->add_option("--samples", samples, "grid sample count (>= 2)");
  fig_cmd->add_option("--output", outdir, "output directory");
  fig_cmd->add_flag("--exact", exact, "exact values instead of decimals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_fn, eval_x, eval_op, eval_a);
    if (var_cmd->parsed()) return run_var(var_fn, var_interval, var_of);
    if (ver_cmd->parsed()) return run_verify(suite, seed, count, N, quiet);
    if (fig_cmd->parsed()) return run_figure(fig_fn, samples, outdir, exact);
  } catch (const maxvar::PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
