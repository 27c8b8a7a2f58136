#include <doctest.h>

#include <random>

#include "poly.hpp"

using namespace qspectra;

namespace {

IntPoly from_ints(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

// product of (x - r)^m factors
IntPoly from_roots(const std::vector<std::pair<long, int>>& roots) {
  IntPoly p = IntPoly::constant(Int(1));
  for (auto& [r, m] : roots) p = p * poly_pow(IntPoly::x_minus(Int(r)), m);
  return p;
}

// closed-interval root count of a product of known linear factors
int oracle_count(const std::vector<std::pair<long, int>>& roots, const Rat& lo, const Rat& hi) {
  int total = 0;
  for (auto& [r, m] : roots)
    if (Rat(r) >= lo && Rat(r) <= hi) total += m;
  return total;
}

}  // namespace

TEST_CASE("basic arithmetic and printing") {
  IntPoly p = from_ints({-4, 9, -6, 1});  // x^3 - 6x^2 + 9x - 4
  CHECK(p.degree() == 3);
  CHECK(p.to_string() == "x^3 - 6x^2 + 9x - 4");
  CHECK(p == poly_pow(IntPoly::x_minus(Int(1)), 2) * IntPoly::x_minus(Int(4)));
  CHECK(p.eval(Rat(1)) == 0);
  CHECK(p.eval(Rat(4)) == 0);
  CHECK(p.eval(Rat(0)) == -4);
  CHECK(p.derivative() == from_ints({9, -12, 3}));
  CHECK((p - p).is_zero());
}

TEST_CASE("exact division") {
  IntPoly p = from_roots({{1, 2}, {4, 1}});
  CHECK(exact_div(p, IntPoly::x_minus(Int(4))) == poly_pow(IntPoly::x_minus(Int(1)), 2));
  IntPoly q;
  CHECK(!try_exact_div(p, IntPoly::x_minus(Int(2)), &q));
  CHECK_THROWS_AS(exact_div(p, IntPoly::x_minus(Int(2))), Error);
}

TEST_CASE("gcd and square-free decomposition") {
  IntPoly p = from_roots({{1, 2}, {2, 1}});
  IntPoly g = poly_gcd(p, p.derivative());
  CHECK(g == IntPoly::x_minus(Int(1)));

  auto parts = squarefree_decomposition(from_roots({{0, 1}, {2, 3}, {-1, 2}}));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == IntPoly::x_minus(Int(0)));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == IntPoly::x_minus(Int(-1)));
  CHECK(parts[1].second == 2);
  CHECK(parts[2].first == IntPoly::x_minus(Int(2)));
  CHECK(parts[2].second == 3);
}

TEST_CASE("root counting in closed intervals") {
  // spec examples
  CHECK(count_roots_in(from_roots({{4, 1}, {1, 2}}), Rat(1), Rat(4)) == 3);
  CHECK(count_roots_in(from_ints({0, -2, 1}), Rat(0), Rat(1)) == 1);  // x^2 - 2x on [0,1]

  // irrational roots: x^2 - 2 on [0, 3] has one, [-2, 2] has two
  IntPoly x2m2 = from_ints({-2, 0, 1});
  CHECK(count_roots_in(x2m2, Rat(0), Rat(3)) == 1);
  CHECK(count_roots_in(x2m2, Rat(-2), Rat(2)) == 2);
  CHECK(count_roots_in(x2m2, Rat(3, 2), Rat(2)) == 0);

  // degenerate interval [a, a]
  CHECK(count_roots_in(from_roots({{5, 3}}), Rat(5), Rat(5)) == 3);
  CHECK(count_roots_in(from_roots({{5, 3}}), Rat(4), Rat(4)) == 0);

  CHECK_THROWS_AS(count_roots_in(x2m2, Rat(2), Rat(1)), Error);
}

TEST_CASE("closed-interval counts on random products of linear factors") {
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    std::vector<std::pair<long, int>> roots;
    int k = 1 + int(rng() % 4);
    for (int i = 0; i < k; ++i) {
      long r = long(rng() % 11) - 5;
      bool fresh = true;
      for (auto& [rr, mm] : roots)
        if (rr == r) fresh = false;
      if (!fresh) continue;
      roots.push_back({r, 1 + int(rng() % 3)});
    }
    IntPoly p = from_roots(roots);
    for (long a = -6; a <= 6; ++a)
      for (long b = a; b <= 6; ++b)
        CHECK(count_roots_in(p, Rat(a), Rat(b)) == oracle_count(roots, Rat(a), Rat(b)));
  }
}

TEST_CASE("interval additivity when the split point is not a root") {
  IntPoly p = from_roots({{0, 2}, {3, 1}, {-2, 1}});
  // split [a, c] at b with b not a root: [a,b] + (b,c] = [a,c]
  auto halfopen_above = [&](const Rat& b, const Rat& c) {
    return count_roots_in(p, b, c) - count_roots_in(p, b, b);
  };
  for (long a = -3; a <= 4; ++a)
    for (long c = a; c <= 4; ++c)
      for (long bb = a; bb <= c; ++bb) {
        Rat b = Rat(2 * bb + 1, 2);  // half-integers are never roots here
        if (b < Rat(a) || b > Rat(c)) continue;
        CHECK(count_roots_in(p, Rat(a), b) + halfopen_above(b, Rat(c)) ==
              count_roots_in(p, Rat(a), Rat(c)));
      }
}

TEST_CASE("cauchy bound contains all real roots") {
  IntPoly p = from_roots({{-7, 1}, {11, 2}});
  Rat bound = cauchy_root_bound(p);
  CHECK(count_roots_in(p, -bound, bound) == 3);
}
