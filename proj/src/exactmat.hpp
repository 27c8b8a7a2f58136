#pragma once

#include <vector>

#include "error.hpp"
#include "numbers.hpp"
#include "poly.hpp"

namespace qspectra {

template <class T>
class SquareMat {
 public:
  SquareMat() = default;
  explicit SquareMat(int n) : n_(n), a_(size_t(n) * size_t(n)) {
    if (n < 1 || n > 64) fail(ErrorCode::InvalidParameter, "matrix order must be in 1..64");
  }

  int order() const { return n_; }
  T& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const T& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }

  bool symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

using IntMatrix = SquareMat<Int>;
using RatMatrix = SquareMat<Rat>;

RatMatrix to_rational(const IntMatrix& m);

struct Inertia {
  int n_plus = 0, n_zero = 0, n_minus = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact det(xI - M). Rational Hessenberg reduction with the leading-minor
// recurrence; plain cofactor expansion below order 5. M need not be symmetric.
IntPoly charpoly(const IntMatrix& m);

// Sylvester inertia of a symmetric rational matrix by congruence elimination.
// A zero diagonal pivot with a nonzero off-diagonal partner is consumed as a
// 2x2 hyperbolic block contributing (+1, -1).
Inertia inertia(const RatMatrix& m);
Inertia inertia(const IntMatrix& m);

// Eigenvalues by cyclic Jacobi rotations, descending. Deterministic sweep
// order; fails (Internal) if the off-diagonal norm is not below 1e-12 * ||M||_F
// within 100 sweeps.
std::vector<double> eig_sym_float(const RatMatrix& m);
std::vector<double> eig_sym_float(const IntMatrix& m);

}  // namespace qspectra
