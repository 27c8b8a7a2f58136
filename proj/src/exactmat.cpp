#include "exactmat.hpp"

#include <algorithm>
#include <cmath>

namespace qspectra {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) out.at(i, j) = Rat(m.at(i, j));
  return out;
}

namespace {

// det(xI - M) by cofactor expansion over polynomial entries; fine for n <= 4
IntPoly charpoly_expand(const IntMatrix& m) {
  int n = m.order();
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        a[i][j] = IntPoly::x_minus(m.at(i, j));
      else
        a[i][j] = IntPoly::constant(-m.at(i, j));
    }
  // recursive minors over the row set
  struct Det {
    const std::vector<std::vector<IntPoly>>& a;
    int n;
    IntPoly run(unsigned rows, int col) {
      if (col == n) return IntPoly::constant(Int(1));
      IntPoly acc;
      int sign = 1;
      for (int r = 0; r < n; ++r) {
        if (!(rows >> r & 1)) continue;
        IntPoly sub = run(rows & ~(1u << r), col + 1);
        IntPoly term = a[r][col] * sub;
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
      }
      return acc;
    }
  } det{a, n};
  return det.run((1u << n) - 1, 0);
}

IntPoly charpoly_hessenberg(const IntMatrix& mi) {
  const int n = mi.order();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(mi.at(i, j));

  // similarity reduction to upper Hessenberg form
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(m[piv], m[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(m[i][piv], m[i][k + 1]);
    }
    for (int i = k + 2; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k + 1][k];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[k + 1][j];
      for (int j = 0; j < n; ++j) m[j][k + 1] += f * m[j][i];
    }
  }

  // leading-minor recurrence:
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik * prod_{j=i..k-1} h_{j+1,j} * p_{i-1}
  std::vector<std::vector<Rat>> p(n + 1);
  p[0] = {Rat(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Rat> cur(k + 1, Rat(0));
    for (int i = 0; i < k; ++i) cur[i + 1] += p[k - 1][i];
    for (int i = 0; i < k; ++i) cur[i] -= m[k - 1][k - 1] * p[k - 1][i];
    Rat prod(1);
    for (int i = k - 1; i >= 1; --i) {
      prod *= m[i][i - 1];
      if (prod == 0) break;
      if (m[i - 1][k - 1] != 0) {
        Rat c = m[i - 1][k - 1] * prod;
        for (int j = 0; j < i; ++j) cur[j] -= c * p[i - 1][j];
      }
    }
    p[k] = std::move(cur);
  }

  std::vector<Int> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (boost::multiprecision::denominator(p[n][i]) != 1)
      fail(ErrorCode::Internal, "charpoly produced a non-integer coefficient");
    coeffs[i] = boost::multiprecision::numerator(p[n][i]);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly charpoly(const IntMatrix& m) {
  if (m.order() <= 4) return charpoly_expand(m);
  return charpoly_hessenberg(m);
}

namespace {

void swap_rc(RatMatrix& m, int a, int b) {
  if (a == b) return;
  int n = m.order();
  for (int j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
  for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

Inertia inertia(const RatMatrix& m_in) {
  if (!m_in.symmetric()) fail(ErrorCode::InvalidParameter, "inertia requires a symmetric matrix");
  RatMatrix m = m_in;
  const int n = m.order();
  Inertia out;
  int k = 0;
  while (k < n) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m.at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      swap_rc(m, k, piv);
      const Rat d = m.at(k, k);
      if (d > 0)
        ++out.n_plus;
      else
        ++out.n_minus;
      std::vector<Rat> border(n);  // row k is read throughout the update
      for (int i = k + 1; i < n; ++i) border[i] = m.at(k, i);
      for (int i = k + 1; i < n; ++i) {
        if (border[i] == 0) continue;
        const Rat f = border[i] / d;
        for (int j = k + 1; j <= i; ++j) {
          m.at(i, j) -= f * border[j];
          m.at(j, i) = m.at(i, j);
        }
      }
      ++k;
      continue;
    }
    // diagonal of the trailing block is all zero
    int a = -1, b = -1;
    for (int i = k; i < n && a < 0; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m.at(i, j) != 0) {
          a = i;
          b = j;
          break;
        }
    if (a < 0) {  // trailing block is identically zero
      out.n_zero += n - k;
      break;
    }
    swap_rc(m, k, a);
    swap_rc(m, k + 1, b);
    const Rat w = m.at(k, k + 1);
    ++out.n_plus;
    ++out.n_minus;
    for (int i = k + 2; i < n; ++i) {
      const Rat u = m.at(i, k), v = m.at(i, k + 1);
      if (u == 0 && v == 0) continue;
      for (int j = k + 2; j <= i; ++j) {
        m.at(i, j) -= (u * m.at(k + 1, j) + v * m.at(k, j)) / w;
        m.at(j, i) = m.at(i, j);
      }
    }
    k += 2;
  }
  return out;
}

Inertia inertia(const IntMatrix& m) { return inertia(to_rational(m)); }

std::vector<double> eig_sym_float(const RatMatrix& m) {
  if (!m.symmetric()) fail(ErrorCode::InvalidParameter, "eigensolver requires a symmetric matrix");
  const int n = m.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  double norm2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = static_cast<double>(m.at(i, j));
      norm2 += a[i][j] * a[i][j];
    }
  const double stop = 1e-12 * std::sqrt(norm2);

  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += 2 * a[i][j] * a[i][j];
    if (std::sqrt(off2) <= stop) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t =
            (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  if (!converged) {
    double off2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += 2 * a[i][j] * a[i][j];
    if (std::sqrt(off2) > stop) fail(ErrorCode::Internal, "jacobi did not converge in 100 sweeps");
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

std::vector<double> eig_sym_float(const IntMatrix& m) { return eig_sym_float(to_rational(m)); }

}  // namespace qspectra
