#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace qspectra {

struct TheoremReport {
  std::string theorem_id;
  int n_min = 0, n_max = 0;
  long long graphs_checked = 0;
  std::string status;  // "pass" | "counterexample" | "skipped"
  std::vector<std::string> counterexamples;           // graph6
  std::map<int, std::vector<std::string>> witnesses;  // n -> graph6
  long long runtime_ms = 0;

  bool operator==(const TheoremReport&) const = default;
};

std::string report_to_json(const TheoremReport& r);
TheoremReport report_from_json(std::string_view text);

std::vector<std::string> registered_theorem_ids();

// Run one registered checker over its statement's range, capped at max_n for
// the enumeration-driven entries. Fixed-sweep entries (exact spectrum
// identities, randomized property suites) run their own published range.
TheoremReport verify_theorem(std::string_view theorem_id, int max_n, int jobs = 0);

// Recognizer for the lambda_3 < 0 classification: tries, in order, K_n,
// K_1 u K_{n-1}, K_n - e, K_p u K_q (p, q >= 2), then G_s replacements over
// all compositions of n into 3 <= s <= 12 parts.
struct ClassLabel {
  enum class Kind { None, Complete, K1PlusComplete, CompleteMinusEdge, TwoCliques, GsReplacement };
  Kind kind = Kind::None;
  int s = 0;
  std::vector<int> t;
};
ClassLabel oboudi_recognize(const Graph& g);

// Open-problem sweeps: P1 collects all classes with m[d_n, 2n-2] = 3, P2 all
// connected classes with m[0, d_1] = 3. Output is sorted by (n, canonical
// form); the report variant groups the hits as witnesses per n.
std::vector<std::string> search_problem(std::string_view problem_id, int max_n);
TheoremReport search_problem_report(std::string_view problem_id, int max_n);

int default_jobs();  // QSPECTRA_JOBS if set, else hardware concurrency

}  // namespace qspectra
