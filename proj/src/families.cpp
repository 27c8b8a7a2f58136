#include "families.hpp"

#include <numeric>
#include <string>

namespace qspectra {

namespace {

// closed neighborhood as a bitmask
uint64_t closed_nbhd(const Graph& g, int v) { return g.row(v) | (uint64_t{1} << v); }

bool strict_subset(uint64_t a, uint64_t b) { return a != b && (a & ~b) == 0; }

void validate_gn(const Graph& g, int n) {
  const int nv = (n + 1) / 2, nw = n / 2;
  uint64_t vmask = (uint64_t{1} << nv) - 1;
  uint64_t wmask = ((uint64_t{1} << nw) - 1) << nv;
  // condition 1: nested closed neighborhoods within each part
  for (int i = 0; i + 1 < nv; ++i)
    if (!strict_subset(closed_nbhd(g, i), closed_nbhd(g, i + 1)))
      fail(ErrorCode::Construction, "G_n condition 1 failed on the v part");
  for (int j = 0; j + 1 < nw; ++j)
    if (!strict_subset(closed_nbhd(g, nv + j), closed_nbhd(g, nv + j + 1)))
      fail(ErrorCode::Construction, "G_n condition 1 failed on the w part");
  // condition 2: |N[v_i] ∩ W| = i - 1
  for (int i = 1; i <= nv; ++i)
    if (std::popcount(closed_nbhd(g, i - 1) & wmask) != i - 1)
      fail(ErrorCode::Construction, "G_n condition 2 failed");
  // condition 3: |N[w_j] ∩ V| = j - 1 for even n, j for odd n
  for (int j = 1; j <= nw; ++j) {
    int want = (n % 2 == 0) ? j - 1 : j;
    if (std::popcount(closed_nbhd(g, nv + j - 1) & vmask) != want)
      fail(ErrorCode::Construction, "G_n condition 3 failed");
  }
}

}  // namespace

Graph build_gn(int n) {
  if (n < 2 || n > kMaxOrder) fail(ErrorCode::InvalidParameter, "G_n requires 2 <= n <= 64");
  const int nv = (n + 1) / 2, nw = n / 2;
  Graph g(n);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) g.add_edge(i, j);
  for (int i = 0; i < nw; ++i)
    for (int j = i + 1; j < nw; ++j) g.add_edge(nv + i, nv + j);
  // v_i (1-indexed) is adjacent to the i-1 highest-index w's
  for (int i = 1; i <= nv; ++i)
    for (int j = nw - i + 2; j <= nw; ++j) g.add_edge(i - 1, nv + j - 1);
  validate_gn(g, n);
  return g;
}

Graph gn_pattern(int s) {
  Graph g = build_gn(s);
  const int nv = (s + 1) / 2, nw = s / 2;
  std::vector<int> perm(s);
  for (int i = 0; i < nv; ++i) perm[i] = i;
  for (int j = 0; j < nw; ++j) perm[nv + j] = s - 1 - j;  // w_1 last
  return relabel(g, perm);
}

Graph replace_cliques(const CliqueReplacementSpec& spec) {
  const int s = spec.base.order();
  if ((int)spec.t.size() != s)
    fail(ErrorCode::InvalidParameter, "block-size list must match base order");
  int n = 0;
  for (int ti : spec.t) {
    if (ti < 1) fail(ErrorCode::InvalidParameter, "block sizes must be positive");
    n += ti;
  }
  if (n > kMaxOrder) fail(ErrorCode::InvalidParameter, "replacement exceeds order 64");

  std::vector<int> start(s + 1, 0);
  for (int i = 0; i < s; ++i) start[i + 1] = start[i] + spec.t[i];

  Graph g(n);
  for (int i = 0; i < s; ++i)
    for (int a = start[i]; a < start[i + 1]; ++a)
      for (int b = a + 1; b < start[i + 1]; ++b) g.add_edge(a, b);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (!spec.base.has_edge(i, j)) continue;
      for (int a = start[i]; a < start[i + 1]; ++a)
        for (int b = start[j]; b < start[j + 1]; ++b) g.add_edge(a, b);
    }
  return g;
}

QuotientMatrix quotient_matrix(const CliqueReplacementSpec& spec) {
  Graph g = replace_cliques(spec);
  const int s = spec.base.order();
  std::vector<int> start(s + 1, 0);
  for (int i = 0; i < s; ++i) start[i + 1] = start[i] + spec.t[i];

  QuotientMatrix out{IntMatrix(s), {}, spec.t};
  out.block_degrees.resize(s);
  for (int i = 0; i < s; ++i) {
    int d = g.degree(start[i]);
    for (int a = start[i]; a < start[i + 1]; ++a)
      if (g.degree(a) != d) fail(ErrorCode::Internal, "block degrees are not uniform");
    out.block_degrees[i] = d;
  }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (i == j)
        out.b.at(i, j) = out.block_degrees[i] + spec.t[i] - 1;
      else
        out.b.at(i, j) = spec.base.has_edge(i, j) ? spec.t[j] : 0;
    }
  return out;
}

Graph gs_replacement(int s, const std::vector<int>& t) {
  return replace_cliques({gn_pattern(s), t});
}

QuotientMatrix gs_quotient(int s, const std::vector<int>& t) {
  return quotient_matrix({gn_pattern(s), t});
}

namespace {

IntMatrix mat3(std::initializer_list<long> v) {
  IntMatrix m(3);
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = *it++;
  return m;
}

}  // namespace

IntMatrix b3_matrix(long t) {
  if (t < 1) fail(ErrorCode::InvalidParameter, "B3 requires t >= 1");
  return mat3({2 * t - 1, 1, 0, t, 2 * t, t, 0, 1, 2 * t - 1});
}

IntMatrix b4_matrix(long r) {
  if (r < 1) fail(ErrorCode::InvalidParameter, "B4 requires r >= 1");
  IntMatrix m(4);
  const long rows[4][4] = {{2 * r - 1, 1, 0, 0},
                           {r, r + 1, 1, 0},
                           {0, 1, r + 1, r},
                           {0, 0, 1, 2 * r - 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix bprime_matrix(long t) {
  if (t < 1) fail(ErrorCode::InvalidParameter, "B' requires t >= 1");
  return mat3({2 * t, 2, 0, t, 2 * t + 2, t, 0, 2, 2 * t});
}

Graph proof_graph(std::string_view id) {
  if (id == "fig-n6") {
    Graph g(6);
    const int edges[][2] = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4},
                            {2, 3}, {2, 5}, {3, 5}, {4, 5}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
  }
  if (id == "H1" || id == "H2") {
    Graph g(5);
    const int edges[][2] = {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    if (id == "H2") g.add_edge(3, 4);
    return g;
  }
  fail(ErrorCode::InvalidParameter, "unknown proof graph id: " + std::string(id));
}

}  // namespace qspectra
