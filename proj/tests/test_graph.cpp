#include <doctest.h>

#include <algorithm>
#include <random>

#include "enumeration.hpp"
#include "graph.hpp"

using namespace qspectra;

namespace {

// 2^n subset brute force, the independence-number oracle
int alpha_brute(const Graph& g) {
  int best = 0;
  for (uint64_t s = 0; s < (uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (int i = 0; i < g.order() && ok; ++i) {
      if (!(s >> i & 1)) continue;
      if (g.row(i) & s) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("named constructors") {
  Graph k4 = complete(4);
  CHECK(k4.edge_count() == 6);
  CHECK(degree_sequence(k4) == std::vector<int>{3, 3, 3, 3});

  Graph p3 = path(3);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK(!p3.has_edge(0, 2));
  CHECK(degree_sequence(p3) == std::vector<int>{2, 1, 1});

  Graph k23 = complete_multipartite({2, 3});
  CHECK(k23.edge_count() == 6);
  CHECK(degree_sequence(k23) == std::vector<int>{3, 3, 2, 2, 2});

  CHECK(degree_sequence(cycle(5)) == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(star(4).degree(0) == 3);
  CHECK(edgeless(6).edge_count() == 0);

  CHECK_THROWS_AS(complete(0), Error);
  CHECK_THROWS_AS(complete(65), Error);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), Error);
}

TEST_CASE("adjacency invariants hold for constructed graphs") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Graph g = random_graph(rng, 1 + int(rng() % 12), 0.4);
    for (int i = 0; i < g.order(); ++i) {
      CHECK(!g.has_edge(i, i));
      for (int j = 0; j < g.order(); ++j) CHECK(g.has_edge(i, j) == g.has_edge(j, i));
      CHECK((g.row(i) & ~g.vertex_mask()) == 0);
    }
  }
}

TEST_CASE("union and join") {
  Graph u = disjoint_union(complete(1), complete(2));
  CHECK(degree_sequence(u) == std::vector<int>{1, 1, 0});

  Graph two_k2 = disjoint_union(complete(2), complete(2));
  CHECK(two_k2.edge_count() == 2);
  CHECK(!is_connected(two_k2));

  CHECK(is_isomorphic(join_graphs(complete(1), complete(2)), complete(3)));
  CHECK(is_isomorphic(join_graphs(complete(1), edgeless(3)), star(4)));
  CHECK(is_isomorphic(join_graphs(complete(2), complete(2)), complete(4)));

  CHECK_THROWS_AS(disjoint_union(complete(40), complete(30)), Error);
}

TEST_CASE("degree sequence of a union is the merged multiset") {
  std::mt19937 rng(11);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, 2 + int(rng() % 6), 0.5);
    Graph h = random_graph(rng, 2 + int(rng() % 6), 0.5);
    std::vector<int> merged = degree_sequence(g);
    std::vector<int> dh = degree_sequence(h);
    merged.insert(merged.end(), dh.begin(), dh.end());
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    CHECK(degree_sequence(disjoint_union(g, h)) == merged);
  }
}

TEST_CASE("delete_edge") {
  Graph k4e = delete_edge(complete(4), 0, 1);
  CHECK(degree_sequence(k4e) == std::vector<int>{3, 3, 2, 2});
  CHECK(is_isomorphic(delete_edge(cycle(3), 0, 1), path(3)));
  CHECK(is_isomorphic(delete_edge(path(2), 0, 1), edgeless(2)));
  CHECK_THROWS_AS(delete_edge(path(3), 0, 2), Error);
}

TEST_CASE("induced subgraphs") {
  CHECK(is_isomorphic(induced_subgraph(complete(5), std::vector<int>{0, 1, 2}), complete(3)));
  CHECK(is_isomorphic(induced_subgraph(path(4), std::vector<int>{0, 2, 3}),
                      disjoint_union(complete(1), complete(2))));
  CHECK_THROWS_AS(induced_subgraph(path(4), uint64_t{0}), Error);
}

TEST_CASE("independence number matches the subset brute force exhaustively to n = 7") {
  CHECK(independence_number(complete(7)) == 1);
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(disjoint_union(complete(3), complete(3))) == 2);
  for (int n = 1; n <= 7; ++n) {
    GraphStream s = enumerate_graphs(n);
    while (auto g = s.next()) CHECK(independence_number(*g) == alpha_brute(*g));
  }
}

TEST_CASE("independence number matches the subset brute force on larger random graphs") {
  std::mt19937 rng(41);
  for (int it = 0; it < 6; ++it) {
    int n = 14 + int(rng() % 5);  // up to 18
    Graph g = random_graph(rng, n, 0.25 + 0.1 * (it % 3));
    CHECK(independence_number(g) == alpha_brute(g));
  }
}

TEST_CASE("alpha is additive over unions and max over joins") {
  std::vector<Graph> small;
  for (int n = 1; n <= 5; ++n) {
    GraphStream s = enumerate_graphs(n);
    while (auto g = s.next()) small.push_back(*g);
  }
  REQUIRE(small.size() == 52);  // 1 + 2 + 4 + 11 + 34
  for (const Graph& g : small)
    for (const Graph& h : small) {
      int ag = independence_number(g), ah = independence_number(h);
      CHECK(independence_number(disjoint_union(g, h)) == ag + ah);
      CHECK(independence_number(join_graphs(g, h)) == std::max(ag, ah));
    }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(4)));
  CHECK(!is_connected(disjoint_union(complete(2), complete(2))));
  CHECK(!is_connected(disjoint_union(complete(1), complete(4))));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("canonical form is stable under relabeling") {
  CHECK(is_isomorphic(complete_multipartite({2, 2}), cycle(4)));
  CHECK(!is_isomorphic(star(4), disjoint_union(complete(3), complete(1))));

  std::mt19937 rng(23);
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + int(rng() % 10);
    double p = (it % 3 == 0) ? 0.2 : (it % 3 == 1 ? 0.5 : 0.8);
    Graph g = random_graph(rng, n, p);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
}

TEST_CASE("canonical form distinguishes all classes at n <= 6") {
  // one representative per class and all representatives distinct is checked
  // in the enumeration tests; here make sure a relabeled representative never
  // collides with a different class
  std::mt19937 rng(5);
  for (int n = 4; n <= 6; ++n) {
    std::vector<Graph> reps = all_graphs(n);
    for (size_t i = 0; i < reps.size(); ++i) {
      std::vector<int> perm(n);
      for (int k = 0; k < n; ++k) perm[k] = k;
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph shuffled = relabel(reps[i], perm);
      for (size_t j = 0; j < reps.size(); ++j)
        CHECK(is_isomorphic(shuffled, reps[j]) == (i == j));
    }
  }
}

TEST_CASE("canonical form handles the order cap") {
  CHECK(canonical_form(complete(64)).size() > 1);
  CHECK(is_isomorphic(complete(64), complete(64)));
  Graph big = complete_multipartite({32, 32});
  CHECK(canonical_form(big) == canonical_form(relabel(big, [] {
                                                std::vector<int> p(64);
                                                for (int i = 0; i < 64; ++i) p[i] = 63 - i;
                                                return p;
                                              }())));
}
