#include "maxvar/stepfn.hpp"

#include <algorithm>
#include <sstream>

namespace maxvar {

RealInterval RealInterval::closed(Rational a, Rational b) {
  if (b < a) throw std::invalid_argument("interval endpoints out of order");
  return {std::move(a), std::move(b), true, true};
}

RealInterval RealInterval::open(Rational a, Rational b) {
  if (b < a) throw std::invalid_argument("interval endpoints out of order");
  return {std::move(a), std::move(b), false, false};
}

bool RealInterval::contains(const Rational& x) const {
  if (lo) {
    if (x < *lo) return false;
    if (x == *lo && !lo_closed) return false;
  }
  if (hi) {
    if (*hi < x) return false;
    if (x == *hi && !hi_closed) return false;
  }
  return true;
}

Rational RealInterval::length() const {
  if (!bounded()) throw std::logic_error("unbounded interval");
  return *hi - *lo;
}

std::string RealInterval::str() const {
  std::string s = lo ? (lo_closed ? "[" : "(") + lo->str() : std::string("(-inf");
  s += ",";
  s += hi ? hi->str() + (hi_closed ? "]" : ")") : std::string("inf)");
  return s;
}

RealInterval RealInterval::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "R" || t == "(-inf,inf)") return all();
  auto bad = [&] { throw std::invalid_argument("bad interval: " + s); };
  if (t.size() < 3) bad();
  char open = t.front(), close = t.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) bad();
  std::string body = t.substr(1, t.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) bad();
  std::string a = body.substr(0, comma), b = body.substr(comma + 1);
  RealInterval r;
  r.lo_closed = open == '[';
  r.hi_closed = close == ']';
  if (a != "-inf") r.lo = Rational::parse(a);
  if (b != "inf" && b != "+inf") r.hi = Rational::parse(b);
  if (r.lo && !a.empty() && a == "-inf") bad();
  if (r.bounded() && *r.hi < *r.lo) bad();
  if (!r.lo) r.lo_closed = false;
  if (!r.hi) r.hi_closed = false;
  return r;
}

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<Rational> interval_values,
                           std::vector<Rational> point_values)
    : breakpoints_(std::move(breakpoints)),
      interval_values_(std::move(interval_values)),
      point_values_(std::move(point_values)) {
  check();
  normalize();
}

void StepFunction::check() const {
  if (interval_values_.size() != breakpoints_.size() + 1 ||
      point_values_.size() != breakpoints_.size())
    throw std::invalid_argument("step function: size mismatch");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("step function: breakpoints not increasing");
  for (const auto& v : interval_values_)
    if (v.sign() < 0) throw std::invalid_argument("step function: negative value");
  for (const auto& p : point_values_)
    if (p.sign() < 0) throw std::invalid_argument("step function: negative value");
}

void StepFunction::normalize() {
  std::vector<Rational> bp, iv, pv;
  iv.push_back(interval_values_[0]);
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (iv.back() == point_values_[i] && point_values_[i] == interval_values_[i + 1])
      continue;  // removable point
    bp.push_back(breakpoints_[i]);
    pv.push_back(point_values_[i]);
    iv.push_back(interval_values_[i + 1]);
  }
  breakpoints_ = std::move(bp);
  interval_values_ = std::move(iv);
  point_values_ = std::move(pv);
}

std::size_t StepFunction::piece_right_of(const Rational& x) const {
  return std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) -
         breakpoints_.begin();
}

Rational StepFunction::operator()(const Rational& x) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it != breakpoints_.end() && *it == x)
    return point_values_[it - breakpoints_.begin()];
  return interval_values_[it - breakpoints_.begin()];
}

Rational StepFunction::left_limit(const Rational& x) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return interval_values_[it - breakpoints_.begin()];
}

Rational StepFunction::right_limit(const Rational& x) const {
  return interval_values_[piece_right_of(x)];
}

Rational StepFunction::max_value() const {
  Rational m = interval_values_[0];
  for (const auto& v : interval_values_) m = max(m, v);
  for (const auto& p : point_values_) m = max(m, p);
  return m;
}

Rational StepFunction::integral(const Rational& a, const Rational& b) const {
  if (b < a) throw std::invalid_argument("integral bounds out of order");
  Rational total(0);
  Rational t = a;
  while (t < b) {
    std::size_t i = piece_right_of(t);
    Rational u = i < breakpoints_.size() ? min(breakpoints_[i], b) : b;
    total += interval_values_[i] * (u - t);
    t = u;
  }
  return total;
}

StepFunction StepFunction::scaled(const Rational& c) const {
  if (c.sign() < 0) throw std::invalid_argument("negative scale");
  std::vector<Rational> iv, pv;
  for (const auto& v : interval_values_) iv.push_back(v * c);
  for (const auto& p : point_values_) pv.push_back(p * c);
  return StepFunction(breakpoints_, std::move(iv), std::move(pv));
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  std::vector<Rational> bp;
  std::merge(f.breakpoints_.begin(), f.breakpoints_.end(),
             g.breakpoints_.begin(), g.breakpoints_.end(),
             std::back_inserter(bp));
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<Rational> iv, pv;
  iv.push_back(f.left_tail() + g.left_tail());
  for (const auto& x : bp) {
    pv.push_back(f(x) + g(x));
    iv.push_back(f.right_limit(x) + g.right_limit(x));
  }
  return StepFunction(std::move(bp), std::move(iv), std::move(pv));
}

std::string StepFunction::serialize() const {
  auto join = [](const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += " ";
      s += v[i].str();
    }
    return s;
  };
  return "breakpoints: " + join(breakpoints_) + "\n" +
         "interval_values: " + join(interval_values_) + "\n" +
         "point_values: " + join(point_values_) + "\n";
}

StepFunction StepFunction::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Rational>> rows;
  std::vector<std::string> labels = {"breakpoints:", "interval_values:",
                                     "point_values:"};
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string label;
    ls >> label;
    if (rows.size() >= 3 || label != labels[rows.size()])
      throw std::invalid_argument("bad step function text: " + line);
    std::vector<Rational> vals;
    std::string tok;
    while (ls >> tok) vals.push_back(Rational::parse(tok));
    rows.push_back(std::move(vals));
  }
  if (rows.size() != 3) throw std::invalid_argument("bad step function text");
  return StepFunction(std::move(rows[0]), std::move(rows[1]),
                      std::move(rows[2]));
}

StepFunction make_indicator(const std::vector<RealInterval>& intervals,
                            const Rational& height) {
  if (height.sign() <= 0) throw std::invalid_argument("height must be positive");
  StepFunction result;
  std::optional<Rational> last_hi;
  for (const auto& I : intervals) {
    if (!I.bounded()) throw std::invalid_argument("unbounded indicator interval");
    if (!(*I.lo < *I.hi))
      throw std::invalid_argument("zero-length indicator interval");
    if (last_hi && !(*last_hi < *I.lo))
      throw std::invalid_argument("overlapping indicator intervals");
    last_hi = *I.hi;
    StepFunction one({*I.lo, *I.hi},
                     {Rational(0), height, Rational(0)},
                     {height / Rational(2), height / Rational(2)});
    result = result + one;
  }
  return result;
}

StepFunction make_right_continuous(std::vector<Rational> breakpoints,
                                   std::vector<Rational> interval_values) {
  std::vector<Rational> pv;
  for (std::size_t i = 0; i < breakpoints.size(); ++i)
    pv.push_back(interval_values[i + 1]);
  return StepFunction(std::move(breakpoints), std::move(interval_values),
                      std::move(pv));
}

StepFunction affine_pullback(const StepFunction& f, const Rational& alpha,
                             const Rational& beta) {
  if (alpha.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  const auto& bp = f.breakpoints();
  const auto& iv = f.interval_values();
  const auto& pv = f.point_values();
  std::size_t k = bp.size();
  std::vector<Rational> nbp(k), niv(k + 1), npv(k);
  if (alpha.sign() > 0) {
    for (std::size_t i = 0; i < k; ++i) nbp[i] = (bp[i] - beta) / alpha;
    niv = iv;
    npv = pv;
  } else {
    for (std::size_t i = 0; i < k; ++i) nbp[i] = (bp[k - 1 - i] - beta) / alpha;
    for (std::size_t i = 0; i <= k; ++i) niv[i] = iv[k - i];
    for (std::size_t i = 0; i < k; ++i) npv[i] = pv[k - 1 - i];
  }
  return StepFunction(std::move(nbp), std::move(niv), std::move(npv));
}

Rational variation(const StepFunction& f, const RealInterval& I) {
  if (I.degenerate()) return Rational(0);
  Rational total(0);
  const auto& bp = f.breakpoints();
  const auto& iv = f.interval_values();
  const auto& pv = f.point_values();
  for (std::size_t i = 0; i < bp.size(); ++i) {
    const Rational& x = bp[i];
    bool interior = (!I.lo || *I.lo < x) && (!I.hi || x < *I.hi);
    if (interior) {
      total += abs(iv[i] - pv[i]) + abs(pv[i] - iv[i + 1]);
    } else if (I.lo && x == *I.lo && I.lo_closed) {
      total += abs(pv[i] - iv[i + 1]);
    } else if (I.hi && x == *I.hi && I.hi_closed) {
      total += abs(iv[i] - pv[i]);
    }
  }
  return total;
}

}  // namespace maxvar
