// qspectra command-line tool. Talks to the core exclusively through the
// public C API in qspectra.h; table rendering and argument handling live
// here.
//
// Exit codes: 0 success/pass, 1 counterexample or predicate false, 2 usage
// or parse error, 3 internal invariant violation.

#include <qspectra.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

int exit_code_for(qs_status rc) {
  switch (rc) {
    case QS_OK:
      return 0;
    case QS_ERROR_INTERNAL:
    case QS_ERROR_CONSTRUCTION:
      return 3;
    default:
      return 2;
  }
}

[[noreturn]] void die(qs_status rc) {
  std::cerr << "error: " << qs_last_error() << "\n";
  std::exit(exit_code_for(rc));
}

struct GraphHandle {
  qs_graph* g = nullptr;
  ~GraphHandle() { qs_graph_free(g); }
};

struct CString {
  char* s = nullptr;
  ~CString() { qs_string_free(s); }
};

GraphHandle parse_expr_or_die(const std::string& expr) {
  GraphHandle h;
  qs_status rc = qs_graph_from_expr(expr.c_str(), &h.g);
  if (rc != QS_OK) die(rc);
  return h;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

void print_graph_block(qs_graph* g) {
  CString info;
  qs_status rc = qs_graph_info_json(g, &info.s);
  if (rc != QS_OK) die(rc);
  json j = json::parse(info.s);
  std::cout << "n      " << j["n"].get<int>() << "\n";
  std::cout << "edges  " << j["edges"].get<int>() << "\n";
  std::cout << "degseq";
  for (int d : j["degrees"]) std::cout << " " << d;
  std::cout << "\n";
  std::cout << "edgelist";
  for (auto& e : j["edge_list"]) std::cout << " " << e[0].get<int>() << "-" << e[1].get<int>();
  std::cout << "\n";
  if (!j["graph6"].is_null()) std::cout << "graph6 " << j["graph6"].get<std::string>() << "\n";
}

int cmd_spectrum(const std::string& expr, bool exact_only, bool float_only) {
  GraphHandle h = parse_expr_or_die(expr);
  CString out;
  qs_status rc = qs_spectrum_json(h.g, &out.s);
  if (rc != QS_OK) die(rc);
  json j = json::parse(out.s);
  if (!exact_only) {
    std::cout << "q-spectrum";
    char buf[64];
    for (double v : j["spectrum"]) {
      std::snprintf(buf, sizeof buf, " %.10g", v);
      std::cout << buf;
    }
    std::cout << "\n";
  }
  if (!float_only) {
    std::cout << "charpoly " << j["charpoly_pretty"].get<std::string>() << "\n";
    for (auto& r : j["integer_eigenvalues"])
      std::cout << "eigenvalue " << r["value"].get<long>() << " (multiplicity "
                << r["multiplicity"].get<int>() << ")\n";
    for (auto& f : j["irrational_factors"])
      std::cout << "factor (" << f["factor_pretty"].get<std::string>() << ")^"
                << f["multiplicity"].get<int>() << "\n";
  }
  return 0;
}

int cmd_count(const std::string& expr, const std::string& a, const std::string& b, bool paranoid) {
  GraphHandle h = parse_expr_or_die(expr);
  int count = 0;
  CString diag;
  qs_status rc = qs_count_interval(h.g, a.c_str(), b.c_str(), paranoid ? 1 : 0, &count, &diag.s);
  if (rc != QS_OK) die(rc);
  if (paranoid) {
    json j = json::parse(diag.s);
    for (double v : j["near_endpoint"])
      std::cerr << "note: float eigenvalue " << v << " snapped to an interval endpoint\n";
  }
  std::cout << count << "\n";
  return 0;
}

int cmd_verify(const std::string& id, int max_n, int jobs, const std::string& json_file) {
  CString out;
  qs_status rc = qs_verify_json(id.c_str(), max_n, jobs, &out.s);
  if (rc != QS_OK) die(rc);
  json j = json::parse(out.s);
  std::cout << "theorem  " << j["theorem_id"].get<std::string>() << "\n";
  std::cout << "range    n = " << j["n_min"].get<int>() << ".." << j["n_max"].get<int>() << "\n";
  std::cout << "checked  " << j["graphs_checked"].get<long long>() << "\n";
  std::cout << "status   " << j["status"].get<std::string>() << "\n";
  for (auto& [n, list] : j["witnesses"].items()) {
    std::cout << "witness n=" << n << ":";
    for (auto& g6 : list) std::cout << " " << g6.get<std::string>();
    std::cout << "\n";
  }
  if (!j["counterexamples"].empty()) {
    std::cout << "counterexamples:";
    for (auto& g6 : j["counterexamples"]) std::cout << " " << g6.get<std::string>();
    std::cout << "\n";
  }
  if (!json_file.empty()) write_text(json_file, out.s);
  return j["status"].get<std::string>() == "counterexample" ? 1 : 0;
}

int cmd_enumerate(int n, bool connected, const std::string& out_file) {
  qs_stream* s = nullptr;
  qs_status rc = qs_enumerate_begin(n, connected ? 1 : 0, &s);
  if (rc != QS_OK) die(rc);
  std::unique_ptr<qs_stream, decltype(&qs_stream_free)> owner(s, qs_stream_free);
  std::string lines;
  char buf[512];
  int got;
  while ((got = qs_stream_next(s, buf, sizeof buf)) == 1) {
    lines += buf;
    lines += '\n';
  }
  if (got < 0) die(QS_ERROR_INTERNAL);
  if (out_file.empty())
    std::cout << lines;
  else
    write_text(out_file, lines);
  return 0;
}

int cmd_search(const std::string& problem, int max_n, const std::string& json_file) {
  CString out;
  qs_status rc = qs_search_json(problem.c_str(), max_n, &out.s);
  if (rc != QS_OK) die(rc);
  json j = json::parse(out.s);
  for (auto& [n, list] : j["witnesses"].items())
    for (auto& g6 : list) std::cout << g6.get<std::string>() << "\n";
  if (!json_file.empty()) write_text(json_file, out.s);
  return 0;
}

int cmd_family_gn(int n) {
  GraphHandle h;
  qs_status rc = qs_family_gn(n, &h.g);
  if (rc != QS_OK) die(rc);
  print_graph_block(h.g);
  return 0;
}

int cmd_family_gs(int s, const std::vector<int>& t) {
  GraphHandle h;
  qs_status rc = qs_family_gs(s, t.data(), t.size(), &h.g);
  if (rc != QS_OK) die(rc);
  print_graph_block(h.g);
  CString out;
  rc = qs_family_gs_quotient_json(s, t.data(), t.size(), &out.s);
  if (rc != QS_OK) die(rc);
  json j = json::parse(out.s);
  std::cout << "quotient B rows:";
  for (auto& row : j["B"]) {
    std::cout << " [";
    bool first = true;
    for (auto& v : row) {
      if (!first) std::cout << " ";
      first = false;
      std::cout << v.get<long long>();
    }
    std::cout << "]";
  }
  std::cout << "\n";
  std::cout << "B charpoly " << j["charpoly_pretty"].get<std::string>() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact signless Laplacian eigenvalue distribution toolkit"};
  app.require_subcommand(1);

  int jobs = 0;
  if (const char* env = std::getenv("QSPECTRA_JOBS")) jobs = std::atoi(env);

  std::string expr, a, b, id, json_file, out_file, problem;
  bool paranoid = false, exact_only = false, float_only = false, connected = false;
  int max_n = 0, n_arg = 0;

  auto* sp = app.add_subcommand("spectrum", "Q-spectrum and exact charpoly data of a graph");
  sp->add_option("expr", expr, "graph expression")->required();
  auto* opt_exact = sp->add_flag("--exact", exact_only, "exact charpoly data only");
  sp->add_flag("--float", float_only, "float spectrum only")->excludes(opt_exact);

  auto* cnt = app.add_subcommand("count", "count eigenvalues of Q in a closed interval");
  cnt->add_option("expr", expr, "graph expression")->required();
  cnt->add_option("--a", a, "lower endpoint (number, p/q, d1..dn, dn, dmax, 2n-2)")->required();
  cnt->add_option("--b", b, "upper endpoint")->required();
  cnt->add_flag("--paranoid", paranoid, "run Sturm and float cross-checks");

  auto* ver = app.add_subcommand("verify", "run a registered theorem checker");
  ver->add_option("id", id, "theorem id")->required();
  ver->add_option("--max-n", max_n, "largest order to enumerate")->required();
  ver->add_option("--jobs", jobs, "worker threads (default QSPECTRA_JOBS or hardware)");
  ver->add_option("--json", json_file, "write the JSON report here");

  auto* en = app.add_subcommand("enumerate", "isomorph-free graph6 stream");
  en->add_option("--n", n_arg, "order (1..9)")->required();
  en->add_flag("--connected", connected, "connected classes only");
  en->add_option("--out", out_file, "output file (default stdout)");

  auto* se = app.add_subcommand("search", "open-problem sweeps P1 / P2");
  se->add_option("problem", problem, "P1 or P2")->required();
  se->add_option("--max-n", max_n, "largest order to enumerate")->required();
  se->add_option("--json", json_file, "write the JSON report here");

  auto* fam = app.add_subcommand("family", "construct a structured family");
  auto* gn = fam->add_subcommand("gn", "the graph G_n");
  gn->add_option("n", n_arg, "order")->required();
  std::vector<int> t_list;
  auto* gs = fam->add_subcommand("gs", "clique replacement G_s[K_t1,...,K_ts]");
  gs->add_option("s", n_arg, "pattern order")->required();
  gs->add_option("--t", t_list, "block sizes")->required()->delimiter(',');
  fam->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(expr, exact_only, float_only);
    if (cnt->parsed()) return cmd_count(expr, a, b, paranoid);
    if (ver->parsed()) return cmd_verify(id, max_n, jobs, json_file);
    if (en->parsed()) return cmd_enumerate(n_arg, connected, out_file);
    if (se->parsed()) return cmd_search(problem, max_n, json_file);
    if (fam->parsed()) {
      if (gn->parsed()) return cmd_family_gn(n_arg);
      if (gs->parsed()) return cmd_family_gs(n_arg, t_list);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
