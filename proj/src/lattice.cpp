#include "maxvar/lattice.hpp"

#include <sstream>

namespace maxvar {

std::string HalfInt::str() const {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return integer(std::stoll(s));
    if (s.substr(slash + 1) != "2") throw std::invalid_argument(s);
    return half(std::stoll(s.substr(0, slash)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad site: " + s);
  }
}

LatticeFunction::LatticeFunction(int offset, HalfInt start,
                                 std::vector<Rational> values,
                                 Rational left_tail, Rational right_tail)
    : offset_(offset),
      start_(start),
      values_(std::move(values)),
      left_(std::move(left_tail)),
      right_(std::move(right_tail)) {
  if (offset_ != 0 && offset_ != 1)
    throw std::invalid_argument("offset must be 0 or 1");
  if (!values_.empty() && !on_lattice(start_))
    throw std::invalid_argument("window start off lattice");
  if (left_.sign() < 0 || right_.sign() < 0)
    throw std::invalid_argument("negative tail value");
  for (const auto& v : values_)
    if (v.sign() < 0) throw std::invalid_argument("negative value");
  // trim to the minimal window; if it empties, start_ marks the first
  // right-tail site
  while (!values_.empty() && values_.back() == right_) values_.pop_back();
  while (!values_.empty() && values_.front() == left_) {
    values_.erase(values_.begin());
    start_.h += 2;
  }
  if (values_.empty() && left_ == right_) start_ = HalfInt{offset_};
}

Rational LatticeFunction::operator()(HalfInt n) const {
  if (!on_lattice(n)) throw std::invalid_argument("site off lattice");
  if (n.h < start_.h) return left_;
  if (values_.empty()) return right_;
  long long idx = (n.h - start_.h) / 2;
  if (idx >= static_cast<long long>(values_.size())) return right_;
  return values_[idx];
}

Rational LatticeFunction::max_value() const {
  Rational m = max(left_, right_);
  for (const auto& v : values_) m = max(m, v);
  return m;
}

Rational LatticeFunction::sum_range(HalfInt a, HalfInt b) const {
  long long first = a.h, last = b.h;
  if ((((first % 2) + 2) % 2) != offset_) ++first;
  if ((((last % 2) + 2) % 2) != offset_) --last;
  if (first > last) return Rational(0);
  long long ws = start_.h;
  long long we = values_.empty() ? start_.h - 2 : window_hi().h;
  Rational sum(0);
  long long left_end = std::min(last, ws - 2);
  if (first <= left_end)
    sum += left_ * Rational((left_end - first) / 2 + 1);
  long long mid_lo = std::max(first, ws), mid_hi = std::min(last, we);
  for (long long h = mid_lo; h <= mid_hi; h += 2) sum += values_[(h - ws) / 2];
  long long right_start = std::max(first, we + 2);
  if (right_start <= last)
    sum += right_ * Rational((last - right_start) / 2 + 1);
  return sum;
}

std::string LatticeFunction::serialize() const {
  std::string s = std::to_string(offset_) + "; " + left_.str() + "; ";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += " ";
    s += values_[i].str();
  }
  s += " @ " + start_.str() + "; " + right_.str();
  return s;
}

LatticeFunction LatticeFunction::parse(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw std::invalid_argument("bad lattice text: " + s);
  auto trim = [](std::string t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  int offset = std::stoi(trim(parts[0]));
  Rational lt = Rational::parse(trim(parts[1]));
  Rational rt = Rational::parse(trim(parts[3]));
  std::string body = trim(parts[2]);
  auto at = body.rfind('@');
  if (at == std::string::npos) throw std::invalid_argument("bad lattice text");
  HalfInt start = HalfInt::parse(trim(body.substr(at + 1)));
  std::istringstream vs(body.substr(0, at));
  std::vector<Rational> values;
  std::string tok;
  while (vs >> tok) values.push_back(Rational::parse(tok));
  return LatticeFunction(offset, start, std::move(values), std::move(lt),
                         std::move(rt));
}

namespace {

// [dev_lo, dev_hi] in h units: outside it f is purely tail-valued
void deviation_bounds(const LatticeFunction& f, long long& dev_lo,
                      long long& dev_hi) {
  if (f.empty_window()) {
    dev_lo = f.window_lo().h - 2;
    dev_hi = f.window_lo().h;
  } else {
    dev_lo = f.window_lo().h;
    dev_hi = f.window_hi().h;
  }
}

Rational window_average(const LatticeFunction& f, long long vh, long long wh) {
  Rational sum = f.sum_range(HalfInt{vh}, HalfInt{wh});
  return sum / Rational((wh - vh) / 2 + 1);
}

long long start_site(const LatticeFunction& f, HalfInt n) {
  if (f.on_lattice(n)) return n.h;
  if (n.h != 0) throw std::invalid_argument("site off lattice");
  return n.h - 1;
}

}  // namespace

Rational discrete_mf(const LatticeFunction& f, HalfInt n) {
  long long vstart = start_site(f, n);
  if (f.is_constant()) return f.left_tail();
  Rational best = (f.left_tail() + f.right_tail()) / Rational(2);
  long long dev_lo, dev_hi;
  deviation_bounds(f, dev_lo, dev_hi);
  long long vmin = std::min(dev_lo, 2 * n.h - dev_hi) - 2;
  if (vmin > vstart) vmin = vstart;
  for (long long vh = vstart; vh >= vmin; vh -= 2) {
    Rational avg = window_average(f, vh, 2 * n.h - vh);
    if (best < avg) best = avg;
  }
  return best;
}

Rational brute_mf(const LatticeFunction& f, HalfInt n, long long r_max) {
  long long vstart = start_site(f, n);
  if (f.is_constant()) return f.left_tail();
  long long dev_lo, dev_hi;
  deviation_bounds(f, dev_lo, dev_hi);
  long long vmin = std::min(dev_lo, 2 * n.h - dev_hi) - 2;
  long long required = vmin > vstart ? 0 : (vstart - vmin) / 2;
  if (r_max < required) throw std::invalid_argument("r_max too small");
  Rational best = (f.left_tail() + f.right_tail()) / Rational(2);
  for (long long j = 0; j <= r_max; ++j) {
    long long vh = vstart - 2 * j;
    long long wh = 2 * n.h - vh;
    Rational sum(0);
    long long count = 0;
    for (long long h = vh; h <= wh; h += 2) {
      sum += f(HalfInt{h});
      ++count;
    }
    Rational avg = sum / Rational(count);
    if (best < avg) best = avg;
  }
  return best;
}

Rational discrete_var(const LatticeFunction& f, const DiscreteInterval& I) {
  long long dev_lo, dev_hi;
  deviation_bounds(f, dev_lo, dev_hi);
  long long lo = dev_lo - 2, hi = dev_hi + 2;
  if (I.lo) {
    long long a = I.lo->h;
    if ((((a % 2) + 2) % 2) != f.offset()) ++a;
    if (a > lo) lo = a;
  }
  if (I.hi) {
    long long b = I.hi->h;
    if ((((b % 2) + 2) % 2) != f.offset()) --b;
    if (b < hi) hi = b;
  }
  Rational total(0);
  for (long long h = lo; h + 2 <= hi; h += 2)
    total += abs(f(HalfInt{h + 2}) - f(HalfInt{h}));
  return total;
}

Rational discrete_m0(const LatticeFunction& f, HalfInt n, HalfInt a) {
  if (!f.on_lattice(a) || a.h <= 0)
    throw std::invalid_argument("a must be a positive lattice site");
  if (n.h < 0 || n.h > a.h) throw std::invalid_argument("n outside [0, a]");
  long long vstart = start_site(f, n);
  bool have = false;
  Rational best(0);
  for (long long vh = vstart; vh > -a.h; vh -= 2) {
    Rational avg = window_average(f, vh, 2 * n.h - vh);
    if (!have || best < avg) {
      best = avg;
      have = true;
    }
  }
  return best;
}

Rational discrete_m1(const LatticeFunction& f, HalfInt n, HalfInt a) {
  if (!f.on_lattice(a) || a.h <= 0)
    throw std::invalid_argument("a must be a positive lattice site");
  if (n.h < 0 || n.h > a.h) throw std::invalid_argument("n outside [0, a]");
  (void)start_site(f, n);  // validates n
  long long dev_lo, dev_hi;
  deviation_bounds(f, dev_lo, dev_hi);
  long long vmin = std::min({dev_lo, 2 * n.h - dev_hi, -a.h}) - 2;
  Rational best = (f.left_tail() + f.right_tail()) / Rational(2);
  for (long long vh = -a.h; vh >= vmin; vh -= 2) {
    Rational avg = window_average(f, vh, 2 * n.h - vh);
    if (best < avg) best = avg;
  }
  return best;
}

StepFunction embed_to_step(const LatticeFunction& f) {
  if (f.offset() != 0)
    throw std::invalid_argument("embedding needs the integer lattice");
  if (f.is_constant()) return StepFunction(f.left_tail());
  std::vector<Rational> bp, iv;
  iv.push_back(f.left_tail());
  long long lo = f.window_lo().h;
  long long hi = f.empty_window() ? lo - 2 : f.window_hi().h;
  for (long long h = lo; h <= hi + 2; h += 2) {
    bp.push_back(Rational(h - 1, 2));
    iv.push_back(h <= hi ? f.values()[(h - lo) / 2] : f.right_tail());
  }
  return make_right_continuous(std::move(bp), std::move(iv));
}

}  // namespace maxvar
