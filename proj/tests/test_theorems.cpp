#include <doctest.h>

#include <algorithm>

#include "enumeration.hpp"
#include "families.hpp"
#include "spectral.hpp"
#include "theorems.hpp"

using namespace qspectra;

TEST_CASE("report json round-trips") {
  TheoremReport rep = verify_theorem("T-dn-eq-2", 5, 1);
  std::string text = report_to_json(rep);
  CHECK(report_from_json(text) == rep);

  TheoremReport search = search_problem_report("P1", 4);
  CHECK(report_from_json(report_to_json(search)) == search);

  CHECK_THROWS_AS(report_from_json("{not json"), Error);
  CHECK_THROWS_AS(report_from_json("{\"theorem_id\": 3}"), Error);
}

TEST_CASE("reports are deterministic across runs and worker counts") {
  TheoremReport a = verify_theorem("T-d1-eq-2", 6, 1);
  TheoremReport b = verify_theorem("T-d1-eq-2", 6, 4);
  a.runtime_ms = b.runtime_ms = 0;
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("registry rejects unknown ids and bad ranges") {
  CHECK_THROWS_AS(verify_theorem("T-nope", 5), Error);
  CHECK_THROWS_AS(verify_theorem("T-dn-eq-1", 10), Error);
  CHECK_THROWS_AS(verify_theorem("T-dn-eq-1", 0), Error);
  auto ids = registered_theorem_ids();
  CHECK(std::find(ids.begin(), ids.end(), "T-dn-eq-1") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "L-kne-spec") != ids.end());
}

TEST_CASE("skipped status below the statement's range") {
  TheoremReport rep = verify_theorem("T-no-d3-1", 2);
  CHECK(rep.status == "skipped");
  CHECK(rep.graphs_checked == 0);
}

TEST_CASE("characterization witnesses at small orders") {
  TheoremReport rep = verify_theorem("T-dn-eq-1", 7);
  CHECK(rep.status == "pass");
  for (int n = 1; n <= 7; ++n) {
    REQUIRE(rep.witnesses.count(n) == 1);
    REQUIRE(rep.witnesses[n].size() == 1);
    CHECK(is_isomorphic(graph6_decode(rep.witnesses[n][0]), complete(n)));
  }

  TheoremReport rep2 = verify_theorem("T-dn-eq-2", 6);
  CHECK(rep2.status == "pass");
  CHECK(rep2.witnesses[3] == std::vector<std::string>{canonical_form(path(3))});
  CHECK(rep2.witnesses[5] == std::vector<std::string>{canonical_form(gs_replacement(3, {2, 1, 2}))});
  REQUIRE(rep2.witnesses[4].size() == 2);  // 2K2 and P4

  TheoremReport rep3 = verify_theorem("T-no-d3-1", 5);
  CHECK(rep3.status == "pass");
  CHECK(rep3.graphs_checked == 49);  // 4 + 11 + 34 classes with 3 <= n <= 5
  CHECK(rep3.counterexamples.empty());
}

TEST_CASE("the falsified registry entry reports counterexamples") {
  TheoremReport rep = verify_theorem("X-selftest-false", 2);
  CHECK(rep.status == "counterexample");
  CHECK(!rep.counterexamples.empty());
}

TEST_CASE("oboudi recognizer") {
  using K = ClassLabel::Kind;
  CHECK(oboudi_recognize(complete(4)).kind == K::Complete);
  CHECK(oboudi_recognize(delete_edge(complete(4), 0, 1)).kind == K::CompleteMinusEdge);
  CHECK(oboudi_recognize(disjoint_union(Graph(1), complete(4))).kind == K::K1PlusComplete);
  CHECK(oboudi_recognize(disjoint_union(complete(2), complete(3))).kind == K::TwoCliques);
  CHECK(oboudi_recognize(cycle(5)).kind == K::None);
  CHECK(oboudi_recognize(star(5)).kind == K::None);

  ClassLabel p4 = oboudi_recognize(path(4));
  CHECK(p4.kind == K::GsReplacement);
  CHECK(p4.s == 4);
  CHECK(p4.t == std::vector<int>{1, 1, 1, 1});

  ClassLabel bow = oboudi_recognize(gs_replacement(3, {2, 1, 2}));
  CHECK(bow.kind == K::GsReplacement);
  CHECK(bow.s == 3);
}

TEST_CASE("every lambda3-negative class up to n = 6 is recognized") {
  for (int n = 3; n <= 6; ++n) {
    GraphStream s = enumerate_graphs(n);
    while (auto g = s.next()) {
      if (adj_signature(*g).lambda_sign(3) >= 0) continue;
      CHECK(oboudi_recognize(*g).kind != ClassLabel::Kind::None);
    }
  }
  CHECK(verify_theorem("L-oboudi", 6).status == "pass");
}

TEST_CASE("problem searches") {
  std::vector<std::string> p1 = search_problem("P1", 4);
  CHECK(std::find(p1.begin(), p1.end(), canonical_form(cycle(4))) != p1.end());
  CHECK(std::find(p1.begin(), p1.end(), canonical_form(delete_edge(complete(4), 0, 1))) !=
        p1.end());
  // the size byte leads every graph6 line, so plain lexicographic order is
  // exactly (n, canonical form) order
  CHECK(std::is_sorted(p1.begin(), p1.end()));

  std::vector<std::string> p2 = search_problem("P2", 4);
  CHECK(std::find(p2.begin(), p2.end(), canonical_form(path(4))) != p2.end());
  for (const auto& g6 : p2) CHECK(is_connected(graph6_decode(g6)));

  // K3 is excluded from P1 at n = 3: m_{K3}[d_n, 2n-2] = 1
  std::vector<std::string> p1n3 = search_problem("P1", 3);
  CHECK(std::find(p1n3.begin(), p1n3.end(), canonical_form(complete(3))) == p1n3.end());

  CHECK_THROWS_AS(search_problem("P3", 4), Error);
  CHECK_THROWS_AS(search_problem("P1", 10), Error);
}

TEST_CASE("fixed-sweep identities pass") {
  CHECK(verify_theorem("L-kne-spec", 9).status == "pass");
  CHECK(verify_theorem("L-g3g4", 9).status == "pass");
  TheoremReport gs = verify_theorem("L-gs-spectrum", 9);
  CHECK(gs.status == "pass");
  CHECK(gs.graphs_checked == 27 + 81 + 243 + 729);
}

TEST_CASE("property suites pass at desk scale") {
  CHECK(verify_theorem("L-bozhou", 6).status == "pass");
  CHECK(verify_theorem("L-outside", 6).status == "pass");
  CHECK(verify_theorem("L-uniq-min", 6).status == "pass");
  CHECK(verify_theorem("L-alpha-minus-1", 6).status == "pass");
  CHECK(verify_theorem("L-das", 6).status == "pass");
  CHECK(verify_theorem("L-belardo", 6).status == "pass");
  CHECK(verify_theorem("L-weyl", 6).status == "pass");
  CHECK(verify_theorem("L-interlace-edge", 5).status == "pass");
  CHECK(verify_theorem("L-interlace-sub", 9).status == "pass");
  CHECK(verify_theorem("L-inertia-pert", 9).status == "pass");
}
