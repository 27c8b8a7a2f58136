#include "qspectra.h"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

#include "enumeration.hpp"
#include "expr.hpp"
#include "families.hpp"
#include "spectral.hpp"
#include "theorems.hpp"

using nlohmann::ordered_json;

struct qs_graph {
  qspectra::Graph g;
};

struct qs_stream {
  qspectra::GraphStream s;
};

namespace {

thread_local std::string g_last_error;

qs_status status_of(const qspectra::Error& e) {
  using qspectra::ErrorCode;
  switch (e.code()) {
    case ErrorCode::InvalidParameter:
      return QS_ERROR_INVALID_PARAMETER;
    case ErrorCode::NotAnEdge:
      return QS_ERROR_NOT_AN_EDGE;
    case ErrorCode::Parse:
      return QS_ERROR_PARSE;
    case ErrorCode::UnknownId:
      return QS_ERROR_UNKNOWN_ID;
    case ErrorCode::Construction:
      return QS_ERROR_CONSTRUCTION;
    case ErrorCode::Internal:
      return QS_ERROR_INTERNAL;
  }
  return QS_ERROR_INTERNAL;
}

template <class Fn>
qs_status guard(Fn&& fn) {
  try {
    fn();
    return QS_OK;
  } catch (const qspectra::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QS_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QS_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qs_status copy_to_buf(const std::string& s, char* buf, size_t cap) {
  if (!buf || cap < s.size() + 1) {
    g_last_error = "buffer too small";
    return QS_ERROR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return QS_OK;
}

std::vector<std::string> coeff_strings(const qspectra::IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

}  // namespace

extern "C" {

const char* qs_version(void) { return "1.0.0"; }

const char* qs_last_error(void) { return g_last_error.c_str(); }

void qs_string_free(char* s) { delete[] s; }

qs_status qs_graph_from_expr(const char* expr, qs_graph** out) {
  if (!expr || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] { *out = new qs_graph{qspectra::parse_graph_expr(expr)}; });
}

qs_status qs_graph_from_graph6(const char* text, qs_graph** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] { *out = new qs_graph{qspectra::graph6_decode(text)}; });
}

void qs_graph_free(qs_graph* g) { delete g; }

int qs_graph_order(const qs_graph* g) { return g ? g->g.order() : 0; }

int qs_graph_edge_count(const qs_graph* g) { return g ? g->g.edge_count() : 0; }

int qs_graph_connected(const qs_graph* g) { return g && qspectra::is_connected(g->g) ? 1 : 0; }

int qs_graph_isomorphic(const qs_graph* a, const qs_graph* b) {
  if (!a || !b) return 0;
  return qspectra::is_isomorphic(a->g, b->g) ? 1 : 0;
}

qs_status qs_graph_degrees(const qs_graph* g, int* out, size_t cap) {
  if (!g || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  if (cap < (size_t)g->g.order()) {
    g_last_error = "buffer too small";
    return QS_ERROR_BUFFER_TOO_SMALL;
  }
  return guard([&] {
    auto ds = qspectra::degree_sequence(g->g);
    for (size_t i = 0; i < ds.size(); ++i) out[i] = ds[i];
  });
}

qs_status qs_graph_to_graph6(const qs_graph* g, char* buf, size_t cap) {
  if (!g) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  std::string s;
  qs_status rc = guard([&] { s = qspectra::graph6_encode(g->g); });
  if (rc != QS_OK) return rc;
  return copy_to_buf(s, buf, cap);
}

qs_status qs_graph_info_json(const qs_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    ordered_json j;
    j["n"] = g->g.order();
    j["edges"] = g->g.edge_count();
    j["degrees"] = qspectra::degree_sequence(g->g);
    ordered_json edges = ordered_json::array();
    for (int i = 0; i < g->g.order(); ++i)
      for (int k = i + 1; k < g->g.order(); ++k)
        if (g->g.has_edge(i, k)) edges.push_back({i, k});
    j["edge_list"] = edges;
    if (g->g.order() <= 62)
      j["graph6"] = qspectra::graph6_encode(g->g);
    else
      j["graph6"] = nullptr;
    *out = dup_string(j.dump(2));
  });
}

qs_status qs_spectrum(const qs_graph* g, double* out, size_t cap) {
  if (!g || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  if (cap < (size_t)g->g.order()) {
    g_last_error = "buffer too small";
    return QS_ERROR_BUFFER_TOO_SMALL;
  }
  return guard([&] {
    auto ev = qspectra::q_spectrum(g->g);
    for (size_t i = 0; i < ev.size(); ++i) out[i] = ev[i];
  });
}

qs_status qs_spectrum_json(const qs_graph* g, char** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    ordered_json j;
    const int n = g->g.order();
    j["n"] = n;
    j["spectrum"] = qspectra::q_spectrum(g->g);
    qspectra::IntPoly cp = qspectra::charpoly(qspectra::signless_laplacian(g->g));
    j["charpoly"] = coeff_strings(cp);
    j["charpoly_pretty"] = cp.to_string();
    // rational eigenvalues of an integer symmetric matrix are integers, and
    // Q-eigenvalues lie in [0, 2n-2], so a bounded scan splits them off
    ordered_json roots = ordered_json::array();
    ordered_json factors = ordered_json::array();
    for (const auto& [f, mult] : qspectra::squarefree_decomposition(cp)) {
      qspectra::IntPoly rest = f;
      for (long k = 0; k <= 2 * n - 2 && rest.degree() >= 1; ++k) {
        if (rest.sign_at(qspectra::Rat(k)) != 0) continue;
        rest = qspectra::exact_div(rest, qspectra::IntPoly::x_minus(qspectra::Int(k)));
        ordered_json rj;
        rj["value"] = k;
        rj["multiplicity"] = mult;
        roots.push_back(rj);
      }
      if (rest.degree() >= 1) {
        ordered_json fj;
        fj["factor"] = coeff_strings(rest);
        fj["factor_pretty"] = rest.to_string();
        fj["multiplicity"] = mult;
        factors.push_back(fj);
      }
    }
    j["integer_eigenvalues"] = roots;
    j["irrational_factors"] = factors;
    *out = dup_string(j.dump(2));
  });
}

qs_status qs_count_interval(const qs_graph* g, const char* lo, const char* hi, int paranoid,
                            int* out_count, char** out_json) {
  if (!g || !lo || !hi || !out_count) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    qspectra::Rat a = qspectra::parse_bound(lo, g->g);
    qspectra::Rat b = qspectra::parse_bound(hi, g->g);
    qspectra::IntervalCount c = qspectra::m_interval(g->g, a, b, paranoid != 0);
    *out_count = c.count;
    if (out_json) {
      ordered_json j;
      j["lo"] = c.lo.str();
      j["hi"] = c.hi.str();
      j["count"] = c.count;
      j["method"] = c.method == qspectra::CountMethod::Inertia ? "inertia" : "sturm";
      j["near_endpoint"] = c.near_endpoint;
      *out_json = dup_string(j.dump(2));
    }
  });
}

qs_status qs_family_gn(int n, qs_graph** out) {
  if (!out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] { *out = new qs_graph{qspectra::build_gn(n)}; });
}

qs_status qs_family_gs(int s, const int* t, size_t t_len, qs_graph** out) {
  if (!out || (!t && t_len)) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    std::vector<int> tv(t, t + t_len);
    *out = new qs_graph{qspectra::gs_replacement(s, tv)};
  });
}

qs_status qs_family_gs_quotient_json(int s, const int* t, size_t t_len, char** out) {
  if (!out || (!t && t_len)) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    std::vector<int> tv(t, t + t_len);
    qspectra::QuotientMatrix qm = qspectra::gs_quotient(s, tv);
    ordered_json j;
    j["s"] = s;
    j["t"] = qm.block_sizes;
    j["block_degrees"] = qm.block_degrees;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < s; ++i) {
      ordered_json row = ordered_json::array();
      for (int k = 0; k < s; ++k) row.push_back((long long)qm.b.at(i, k));
      rows.push_back(row);
    }
    j["B"] = rows;
    qspectra::IntPoly cp = qspectra::charpoly(qm.b);
    j["charpoly"] = coeff_strings(cp);
    j["charpoly_pretty"] = cp.to_string();
    *out = dup_string(j.dump(2));
  });
}

qs_status qs_enumerate_begin(int n, int connected_only, qs_stream** out) {
  if (!out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    auto filter = connected_only ? qspectra::GraphFilter::Connected : qspectra::GraphFilter::All;
    *out = new qs_stream{qspectra::GraphStream(n, filter)};
  });
}

int qs_stream_next(qs_stream* s, char* buf, size_t cap) {
  if (!s || !buf) {
    g_last_error = "null argument";
    return -1;
  }
  int got = 0;
  qs_status rc = guard([&] {
    auto g = s->s.next();
    if (!g) return;
    std::string line = qspectra::graph6_encode(*g);
    if (cap < line.size() + 1) qspectra::fail(qspectra::ErrorCode::InvalidParameter, "buffer too small");
    std::memcpy(buf, line.c_str(), line.size() + 1);
    got = 1;
  });
  return rc == QS_OK ? got : -1;
}

void qs_stream_free(qs_stream* s) { delete s; }

qs_status qs_theorem_ids(char** out) {
  if (!out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    std::string all;
    for (const auto& id : qspectra::registered_theorem_ids()) {
      all += id;
      all += '\n';
    }
    *out = dup_string(all);
  });
}

qs_status qs_verify_json(const char* theorem_id, int max_n, int jobs, char** out) {
  if (!theorem_id || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    qspectra::TheoremReport rep = qspectra::verify_theorem(theorem_id, max_n, jobs);
    *out = dup_string(qspectra::report_to_json(rep));
  });
}

qs_status qs_search_json(const char* problem_id, int max_n, char** out) {
  if (!problem_id || !out) {
    g_last_error = "null argument";
    return QS_ERROR_INVALID_PARAMETER;
  }
  return guard([&] {
    qspectra::TheoremReport rep = qspectra::search_problem_report(problem_id, max_n);
    *out = dup_string(qspectra::report_to_json(rep));
  });
}

}  // extern "C"
