#include <doctest.h>

#include <cmath>
#include <random>

#include "enumeration.hpp"
#include "exactmat.hpp"
#include "spectral.hpp"

using namespace qspectra;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m((int)rows.size());
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix random_symmetric(std::mt19937& rng, int n, int lo, int hi) {
  IntMatrix m(n);
  auto pick = [&] { return lo + int(rng() % unsigned(hi - lo + 1)); };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = pick();
  return m;
}

}  // namespace

TEST_CASE("charpoly fixed values") {
  // Q(K2) = [[1,1],[1,1]] -> x^2 - 2x
  CHECK(charpoly(mat({{1, 1}, {1, 1}})) == IntPoly(std::vector<Int>{Int(0), Int(-2), Int(1)}));
  // Q(K3) -> (x-4)(x-1)^2
  CHECK(charpoly(signless_laplacian(complete(3))).to_string() == "x^3 - 6x^2 + 9x - 4");
  // A(K3) -> x^3 - 3x - 2
  CHECK(charpoly(adjacency_matrix(complete(3))).to_string() == "x^3 - 3x - 2");
  // non-symmetric quotient-style input
  CHECK(charpoly(mat({{1, 1, 0}, {1, 3, 2}, {0, 1, 1}})).to_string() == "x^3 - 5x^2 + 4x");
}

namespace {

// det(xI - M) at one point by rational LU elimination; the independent oracle
// for the Hessenberg charpoly path
Rat det_shifted(const IntMatrix& m, long x) {
  const int n = m.order();
  RatMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Rat((i == j ? Int(x) : Int(0)) - m.at(i, j));
  Rat det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = a.at(i, k) / a.at(k, k);
      for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("hessenberg charpoly matches the determinant oracle pointwise") {
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    int n = 5 + int(rng() % 4);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = int(rng() % 9) - 4;
    IntPoly p = charpoly(m);
    REQUIRE(p.degree() == n);
    CHECK(p.leading() == 1);
    Int tr(0);
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    CHECK(p.coeff(n - 1) == -tr);
    // nine sample points pin every polynomial of degree <= 8
    for (long x = -4; x <= 4; ++x) CHECK(p.eval(Rat(x)) == det_shifted(m, x));
  }
}

TEST_CASE("inertia fixed values") {
  // Q(K3) - 2I -> (1, 0, 2)
  IntMatrix q = signless_laplacian(complete(3));
  IntMatrix shifted(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) shifted.at(i, j) = q.at(i, j) - (i == j ? 2 : 0);
  CHECK(inertia(shifted) == Inertia{1, 0, 2});

  // hyperbolic pair [[0,1],[1,0]] -> (1, 0, 1)
  CHECK(inertia(mat({{0, 1}, {1, 0}})) == Inertia{1, 0, 1});
  // zero matrix
  CHECK(inertia(mat({{0, 0}, {0, 0}})) == Inertia{0, 2, 0});
  // zero diagonal but full rank, needs two hyperbolic steps
  CHECK(inertia(mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})) == Inertia{2, 0, 2});

  CHECK_THROWS_AS(inertia(mat({{0, 1}, {2, 0}})), Error);
}

TEST_CASE("signless laplacians are positive semidefinite") {
  for (int n = 1; n <= 6; ++n) {
    GraphStream s = enumerate_graphs(n);
    while (auto g = s.next()) {
      Inertia in = inertia(signless_laplacian(*g));
      CHECK(in.n_minus == 0);
      CHECK(in.n_plus + in.n_zero == n);
    }
  }
}

TEST_CASE("inertia agrees with float eigensigns and Sturm counts on 500 random matrices") {
  std::mt19937 rng(20240814);
  for (int it = 0; it < 500; ++it) {
    int n = 1 + int(rng() % 10);
    IntMatrix m = random_symmetric(rng, n, -5, 5);
    Inertia in = inertia(m);
    CHECK(in.n_plus + in.n_zero + in.n_minus == n);

    std::vector<double> ev = eig_sym_float(m);
    int fp = 0, fz = 0, fm = 0;
    for (double v : ev) (v > 1e-8 ? fp : (v < -1e-8 ? fm : fz))++;
    CHECK(in.n_plus == fp);
    CHECK(in.n_zero == fz);
    CHECK(in.n_minus == fm);

    IntPoly p = charpoly(m);
    int zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    Rat bound = cauchy_root_bound(p);
    int neg = count_roots_in(p, -bound, Rat(0)) - zero_mult;
    CHECK(in.n_zero == zero_mult);
    CHECK(in.n_minus == neg);
    CHECK(in.n_plus == count_roots_in(p, Rat(0), bound) - zero_mult);
  }
}

TEST_CASE("gershgorin: all Q eigenvalues lie in [0, 2n-2], exhaustive n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    GraphStream s = enumerate_graphs(n);
    while (auto g = s.next()) {
      IntPoly p = charpoly(signless_laplacian(*g));
      CHECK(count_roots_in(p, Rat(0), Rat(2 * n - 2)) == n);
    }
  }
}

TEST_CASE("low-rank perturbation moves inertia by at most the rank") {
  std::mt19937 rng(20240815);
  auto pick = [&](int lo, int hi) { return lo + int(rng() % unsigned(hi - lo + 1)); };
  for (int it = 0; it < 500; ++it) {
    int n = pick(2, 8);
    IntMatrix a = random_symmetric(rng, n, -5, 5);
    int r = pick(1, 3);
    IntMatrix b(n);
    for (int k = 0; k < r; ++k) {
      std::vector<long> v(n);
      for (auto& x : v) x = pick(-2, 2);
      int sigma = pick(0, 1) ? 1 : -1;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) += sigma * v[i] * v[j];
    }
    IntMatrix sum(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum.at(i, j) = a.at(i, j) + b.at(i, j);
    Inertia ia = inertia(a), ib = inertia(b), is = inertia(sum);
    int rank = ib.n_plus + ib.n_minus;
    CHECK(rank <= r);
    CHECK(std::abs(is.n_plus - ia.n_plus) <= rank);
    CHECK(std::abs(is.n_minus - ia.n_minus) <= rank);
    CHECK(std::abs(is.n_zero - ia.n_zero) <= rank);
  }
}

TEST_CASE("jacobi eigensolver fixed values") {
  std::vector<double> k4 = eig_sym_float(signless_laplacian(complete(4)));
  CHECK(k4[0] == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(k4[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(k4[3] == doctest::Approx(2.0).epsilon(1e-10));

  std::vector<double> k4e = eig_sym_float(signless_laplacian(delete_edge(complete(4), 0, 1)));
  CHECK(k4e[0] == doctest::Approx(3 + std::sqrt(5.0)).epsilon(1e-10));
  CHECK(k4e[1] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(k4e[2] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(k4e[3] == doctest::Approx(3 - std::sqrt(5.0)).epsilon(1e-10));

  std::vector<double> p3 = eig_sym_float(signless_laplacian(path(3)));
  CHECK(p3[0] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(p3[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(p3[2] == doctest::Approx(0.0).epsilon(1e-10));
}
