#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace qspectra {

IntPoly IntPoly::x_minus(const Int& r) { return IntPoly(std::vector<Int>{-r, Int(1)}); }

const Int& IntPoly::leading() const {
  if (c_.empty()) fail(ErrorCode::Internal, "leading coefficient of zero polynomial");
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> r(c_);
  for (auto& v : r) v = -v;
  return IntPoly(std::move(r));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
  return acc;
}

int IntPoly::sign_at(const Rat& x) const { return eval(x).sign(); }

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int((long)i);
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
  return g < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  std::vector<Int> r(c_);
  for (auto& v : r) v /= g;
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = c_[k];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) out << a.str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

IntPoly poly_pow(const IntPoly& p, int e) {
  if (e < 0) fail(ErrorCode::InvalidParameter, "negative polynomial power");
  IntPoly acc = IntPoly::constant(Int(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

namespace {

// dense rationals, used only inside division/gcd helpers
using RatVec = std::vector<Rat>;

RatVec to_rat(const IntPoly& p) {
  RatVec r(p.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
  return r;
}

void rat_trim(RatVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// num = quot * den + rem over Q[x]
void rat_divmod(RatVec num, const RatVec& den, RatVec& quot, RatVec& rem) {
  quot.assign(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rat(0));
  const Rat& lead = den.back();
  while (num.size() >= den.size() && !num.empty()) {
    Rat f = num.back() / lead;
    size_t shift = num.size() - den.size();
    quot[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num.pop_back();
    rat_trim(num);
    if (num.empty()) break;
  }
  rem = std::move(num);
  rat_trim(quot);
}

}  // namespace

bool try_exact_div(const IntPoly& num, const IntPoly& den, IntPoly* quot) {
  if (den.is_zero()) fail(ErrorCode::InvalidParameter, "division by zero polynomial");
  if (num.is_zero()) {
    if (quot) *quot = IntPoly();
    return true;
  }
  if (num.degree() < den.degree()) return false;
  RatVec q, r;
  rat_divmod(to_rat(num), to_rat(den), q, r);
  if (!r.empty()) return false;
  std::vector<Int> qc(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (boost::multiprecision::denominator(q[i]) != 1) return false;
    qc[i] = boost::multiprecision::numerator(q[i]);
  }
  if (quot) *quot = IntPoly(std::move(qc));
  return true;
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
  IntPoly q;
  if (!try_exact_div(num, den, &q)) fail(ErrorCode::Internal, "polynomial division not exact");
  return q;
}

namespace {

// remainder of a by b scaled by some positive constant; both integer
IntPoly scaled_rem(IntPoly a, const IntPoly& b) {
  const Int& lb = b.leading();
  int steps = 0;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    std::vector<Int> next(std::max(a.coeffs().size(), b.coeffs().size() + shift), Int(0));
    const Int la = a.leading();
    for (size_t i = 0; i < a.coeffs().size(); ++i) next[i] = a.coeffs()[i] * lb;
    for (size_t i = 0; i < b.coeffs().size(); ++i) next[i + shift] -= b.coeffs()[i] * la;
    a = IntPoly(std::move(next));
    ++steps;
  }
  if (lb < 0 && (steps & 1)) return -a;
  return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    IntPoly r = scaled_rem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.leading() < 0 ? -x : x;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() < 1) return out;
  IntPoly f = p.primitive();
  if (f.leading() < 0) f = -f;
  IntPoly d = poly_gcd(f, f.derivative());
  if (d.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPoly b = exact_div(f, d);
  IntPoly c = exact_div(f.derivative(), d);
  IntPoly z = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    IntPoly a = poly_gcd(b, z);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    z = exact_div(z, a) - b.derivative();
    ++i;
  }
  return out;
}

namespace {

// Sturm chain of a square-free polynomial; entries are primitive, with signs
// matching the textbook chain up to positive factors.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain;
  chain.push_back(f.primitive());
  IntPoly d = f.derivative().primitive();
  if (!d.is_zero()) chain.push_back(d);
  while (chain.size() >= 2 && !chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly r = scaled_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((-r).primitive());
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// distinct roots of square-free f in the half-open interval (lo, hi]
int sturm_halfopen(const IntPoly& f, const Rat& lo, const Rat& hi) {
  auto chain = sturm_chain(f);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace

int count_roots_in(const IntPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) fail(ErrorCode::InvalidParameter, "root count of zero polynomial");
  if (lo > hi) fail(ErrorCode::InvalidParameter, "interval endpoints out of order");
  int total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    int cnt = sturm_halfopen(f, lo, hi);
    if (f.sign_at(lo) == 0) ++cnt;
    total += mult * cnt;
  }
  return total;
}

Rat cauchy_root_bound(const IntPoly& p) {
  if (p.degree() < 1) return Rat(0);
  Rat lead = Rat(p.leading() < 0 ? Int(-p.leading()) : p.leading());
  Rat worst(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rat a = Rat(p.coeff(k) < 0 ? Int(-p.coeff(k)) : p.coeff(k)) / lead;
    if (a > worst) worst = a;
  }
  return worst + 1;
}

}  // namespace qspectra
