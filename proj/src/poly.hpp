#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"

namespace qspectra {

// Integer-coefficient univariate polynomial; coeffs()[k] multiplies x^k.
// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  static IntPoly constant(Int c) { return IntPoly(std::vector<Int>{std::move(c)}); }
  static IntPoly x_minus(const Int& r);  // x - r

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Int(0); }
  const Int& leading() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  Int content() const;        // gcd of coefficients, always >= 0
  IntPoly primitive() const;  // content divided out, leading sign kept

  std::string to_string() const;  // e.g. "x^3 - 6x^2 + 9x - 4"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

IntPoly poly_pow(const IntPoly& p, int e);

// Division with exactness check; *quot valid only when true is returned.
bool try_exact_div(const IntPoly& num, const IntPoly& den, IntPoly* quot);
IntPoly exact_div(const IntPoly& num, const IntPoly& den);  // throws Internal if inexact

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading coeff

// Yun square-free decomposition: p = c * prod f_i^{m_i} with the f_i primitive,
// square-free, pairwise coprime, positive leading coefficients.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Number of real roots in the closed interval [lo, hi], counted with
// multiplicity: Sturm chains on the square-free factors plus exact endpoint
// evaluation.
int count_roots_in(const IntPoly& p, const Rat& lo, const Rat& hi);

Rat cauchy_root_bound(const IntPoly& p);  // all real roots lie in [-B, B]

}  // namespace qspectra
