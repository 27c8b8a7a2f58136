// Exercises the public C surface in qspectra.h the way an out-of-process
// consumer would: opaque handles, status codes, caller buffers, and
// library-allocated JSON strings.

#include <doctest.h>
#include <qspectra.h>

#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct CString {
  char* s = nullptr;
  ~CString() { qs_string_free(s); }
};

}  // namespace

TEST_CASE("graph handles from expressions and graph6") {
  qs_graph* g = nullptr;
  REQUIRE(qs_graph_from_expr("Kminus(4)", &g) == QS_OK);
  CHECK(qs_graph_order(g) == 4);
  CHECK(qs_graph_edge_count(g) == 5);
  CHECK(qs_graph_connected(g) == 1);

  int degrees[4];
  REQUIRE(qs_graph_degrees(g, degrees, 4) == QS_OK);
  CHECK(degrees[0] == 3);
  CHECK(degrees[3] == 2);
  CHECK(qs_graph_degrees(g, degrees, 3) == QS_ERROR_BUFFER_TOO_SMALL);

  char g6[16];
  REQUIRE(qs_graph_to_graph6(g, g6, sizeof g6) == QS_OK);
  qs_graph* h = nullptr;
  REQUIRE(qs_graph_from_graph6(g6, &h) == QS_OK);
  CHECK(qs_graph_isomorphic(g, h) == 1);

  qs_graph_free(g);
  qs_graph_free(h);
}

TEST_CASE("error reporting") {
  qs_graph* g = nullptr;
  CHECK(qs_graph_from_expr("K(", &g) == QS_ERROR_PARSE);
  CHECK(std::strlen(qs_last_error()) > 0);
  CHECK(qs_graph_from_expr("K(99)", &g) == QS_ERROR_INVALID_PARAMETER);
  CHECK(qs_graph_from_graph6("B", &g) == QS_ERROR_PARSE);
  CHECK(std::string(qs_last_error()).find("byte") != std::string::npos);
  CHECK(qs_graph_from_expr(nullptr, &g) == QS_ERROR_INVALID_PARAMETER);

  CString out;
  CHECK(qs_verify_json("T-missing", 5, 1, &out.s) == QS_ERROR_UNKNOWN_ID);
  CHECK(qs_search_json("P9", 5, &out.s) == QS_ERROR_UNKNOWN_ID);
}

TEST_CASE("spectrum and counting through the C surface") {
  qs_graph* g = nullptr;
  REQUIRE(qs_graph_from_expr("C(5)", &g) == QS_OK);

  double ev[5];
  REQUIRE(qs_spectrum(g, ev, 5) == QS_OK);
  CHECK(ev[0] == doctest::Approx(4.0));

  int count = -1;
  REQUIRE(qs_count_interval(g, "0", "d1", 1, &count, nullptr) == QS_OK);
  CHECK(count == 2);

  CString diag;
  REQUIRE(qs_count_interval(g, "dn", "2n-2", 0, &count, &diag.s) == QS_OK);
  json j = json::parse(diag.s);
  CHECK(j["method"] == "inertia");
  CHECK(j["count"] == count);

  CString spec;
  REQUIRE(qs_spectrum_json(g, &spec.s) == QS_OK);
  json sj = json::parse(spec.s);
  CHECK(sj["n"] == 5);
  CHECK(sj["charpoly"].size() == 6);

  qs_graph_free(g);

  // K4: integer spectrum {6, 2, 2, 2} extracted exactly
  qs_graph* k4 = nullptr;
  REQUIRE(qs_graph_from_expr("K(4)", &k4) == QS_OK);
  CString spec4;
  REQUIRE(qs_spectrum_json(k4, &spec4.s) == QS_OK);
  json s4 = json::parse(spec4.s);
  REQUIRE(s4["integer_eigenvalues"].size() == 2);  // multiplicity-ascending factor order
  CHECK(s4["integer_eigenvalues"][0]["value"] == 6);
  CHECK(s4["integer_eigenvalues"][0]["multiplicity"] == 1);
  CHECK(s4["integer_eigenvalues"][1]["value"] == 2);
  CHECK(s4["integer_eigenvalues"][1]["multiplicity"] == 3);
  CHECK(s4["irrational_factors"].empty());
  qs_graph_free(k4);
}

TEST_CASE("families through the C surface") {
  qs_graph* gn = nullptr;
  REQUIRE(qs_family_gn(5, &gn) == QS_OK);
  CHECK(qs_graph_edge_count(gn) == 7);
  qs_graph_free(gn);

  int t[3] = {2, 1, 2};
  qs_graph* bow = nullptr;
  REQUIRE(qs_family_gs(3, t, 3, &bow) == QS_OK);
  CHECK(qs_graph_order(bow) == 5);
  qs_graph_free(bow);

  CString q;
  REQUIRE(qs_family_gs_quotient_json(3, t, 3, &q.s) == QS_OK);
  json qj = json::parse(q.s);
  CHECK(qj["B"][0] == json::array({3, 1, 0}));
  CHECK(qj["B"][1] == json::array({2, 4, 2}));
  CHECK(qj["block_degrees"] == json::array({2, 4, 2}));
}

TEST_CASE("enumeration stream") {
  qs_stream* s = nullptr;
  REQUIRE(qs_enumerate_begin(4, 0, &s) == QS_OK);
  std::vector<std::string> lines;
  char buf[64];
  int got;
  while ((got = qs_stream_next(s, buf, sizeof buf)) == 1) lines.push_back(buf);
  CHECK(got == 0);
  CHECK(lines.size() == 11);
  qs_stream_free(s);

  REQUIRE(qs_enumerate_begin(4, 1, &s) == QS_OK);
  int connected = 0;
  while (qs_stream_next(s, buf, sizeof buf) == 1) ++connected;
  CHECK(connected == 6);
  qs_stream_free(s);

  CHECK(qs_enumerate_begin(10, 0, &s) == QS_ERROR_INVALID_PARAMETER);
}

TEST_CASE("verify and search reports") {
  CString out;
  REQUIRE(qs_verify_json("T-dn-eq-1", 5, 1, &out.s) == QS_OK);
  json j = json::parse(out.s);
  CHECK(j["status"] == "pass");
  CHECK(j["graphs_checked"] == 52);
  CHECK(j["witnesses"]["4"].size() == 1);

  CString ids;
  REQUIRE(qs_theorem_ids(&ids.s) == QS_OK);
  CHECK(std::string(ids.s).find("L-belardo") != std::string::npos);

  CString p1;
  REQUIRE(qs_search_json("P1", 4, &p1.s) == QS_OK);
  json pj = json::parse(p1.s);
  CHECK(pj["status"] == "pass");
  CHECK(pj["witnesses"]["4"].size() >= 2);  // C4 and K4-e among them
}
