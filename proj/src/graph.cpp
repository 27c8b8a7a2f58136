#include "graph.hpp"

#include <algorithm>
#include <numeric>

namespace qspectra {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) fail(ErrorCode::InvalidParameter, "order must be in 1..64");
}

}  // namespace

Graph edgeless(int n) {
  check_order(n);
  return Graph(n);
}

Graph complete(int n) {
  check_order(n);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph path(int n) {
  check_order(n);
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  check_order(n);
  Graph g(n);
  if (n == 1) return g;
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int n) {
  check_order(n);
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidParameter, "multipartite needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) fail(ErrorCode::InvalidParameter, "part sizes must be positive");
    n += p;
  }
  check_order(n);
  Graph g(n);
  int a = 0;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    int b = a + parts[pi];
    for (int i = a; i < b; ++i)
      for (int j = b; j < n; ++j) g.add_edge(i, j);
    a = b;
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  if (n > kMaxOrder) fail(ErrorCode::InvalidParameter, "union exceeds order 64");
  Graph out(n);
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) out.add_edge(i, j);
  int off = g.order();
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.has_edge(i, j)) out.add_edge(i + off, j + off);
  return out;
}

Graph join_graphs(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < h.order(); ++j) out.add_edge(i, g.order() + j);
  return out;
}

Graph delete_edge(const Graph& g, int i, int j) {
  if (i < 0 || j < 0 || i >= g.order() || j >= g.order() || i == j || !g.has_edge(i, j))
    fail(ErrorCode::NotAnEdge, "no such edge");
  Graph out = g;
  out.remove_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, uint64_t keep) {
  keep &= g.vertex_mask();
  int m = std::popcount(keep);
  if (m == 0) fail(ErrorCode::InvalidParameter, "induced subgraph on empty vertex set");
  std::vector<int> verts;
  verts.reserve(m);
  uint64_t w = keep;
  while (w) {
    verts.push_back(std::countr_zero(w));
    w &= w - 1;
  }
  Graph out(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(verts[i], verts[j])) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  uint64_t keep = 0;
  for (int v : verts) {
    if (v < 0 || v >= g.order()) fail(ErrorCode::InvalidParameter, "vertex out of range");
    keep |= uint64_t{1} << v;
  }
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if ((int)perm.size() != n) fail(ErrorCode::InvalidParameter, "permutation size mismatch");
  uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n) fail(ErrorCode::InvalidParameter, "permutation value out of range");
    seen |= uint64_t{1} << p;
  }
  if (std::popcount(seen) != n) fail(ErrorCode::InvalidParameter, "not a permutation");
  Graph out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(i, j)) out.add_edge(perm[i], perm[j]);
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

int degree_k(const Graph& g, int k) {
  if (k < 1 || k > g.order()) fail(ErrorCode::InvalidParameter, "degree index out of range");
  return degree_sequence(g)[k - 1];
}

namespace {

void mis_rec(const Graph& g, uint64_t cand, int size, int& best) {
  if (size + std::popcount(cand) <= best) return;
  if (!cand) {
    best = std::max(best, size);
    return;
  }
  // branch on the candidate of largest degree inside the candidate set
  int pick = -1, dmax = -1;
  for (uint64_t m = cand; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int d = std::popcount(g.row(v) & cand);
    if (d > dmax) {
      dmax = d;
      pick = v;
    }
  }
  if (dmax == 0) {  // candidates are pairwise non-adjacent
    best = std::max(best, size + std::popcount(cand));
    return;
  }
  mis_rec(g, cand & ~(g.row(pick) | (uint64_t{1} << pick)), size + 1, best);
  mis_rec(g, cand & ~(uint64_t{1} << pick), size, best);
}

}  // namespace

int independence_number(const Graph& g) {
  int best = 0;
  mis_rec(g, g.vertex_mask(), 0, best);
  return best;
}

bool is_connected(const Graph& g) {
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t m = frontier; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      next |= g.row(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

}  // namespace qspectra
