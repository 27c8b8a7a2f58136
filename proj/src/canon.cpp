#include <algorithm>
#include <map>
#include <optional>

#include "graph.hpp"

namespace qspectra {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split every cell by the vector of neighbor counts
// into all cells, until stable. Cell order and within-split group order are
// functions of the counts only, so the resulting ordered partition is an
// isomorphism invariant.
void refine(const Graph& g, Cells& cells) {
  for (;;) {
    std::vector<uint64_t> masks(cells.size(), 0);
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c] |= uint64_t{1} << v;

    bool changed = false;
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(masks.size());
        for (size_t c = 0; c < masks.size(); ++c) sig[c] = std::popcount(g.row(v) & masks[c]);
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, verts] : groups) next.push_back(std::move(verts));
    }
    cells = std::move(next);
    if (!changed) return;
  }
}

// A stable partition whose cells are cliques or independent sets with
// all-or-nothing edges between cells fixes the adjacency matrix regardless of
// the order chosen inside the cells, so it terminates the search.
bool homogeneous(const Graph& g, const Cells& cells) {
  std::vector<uint64_t> masks(cells.size(), 0);
  for (size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) masks[c] |= uint64_t{1} << v;
  for (size_t c = 0; c < cells.size(); ++c) {
    int k = (int)cells[c].size();
    if (k > 1) {
      int d0 = std::popcount(g.row(cells[c][0]) & masks[c]);
      if (d0 != 0 && d0 != k - 1) return false;
      for (int v : cells[c])
        if (std::popcount(g.row(v) & masks[c]) != d0) return false;
    }
    for (size_t e = c + 1; e < cells.size(); ++e) {
      int ke = (int)cells[e].size();
      int d0 = std::popcount(g.row(cells[c][0]) & masks[e]);
      if (d0 != 0 && d0 != ke) return false;
      for (int v : cells[c])
        if (std::popcount(g.row(v) & masks[e]) != d0) return false;
    }
  }
  return true;
}

// Packed adjacency of g relabeled so that lab[k] becomes vertex k: size byte
// n+63, then the upper triangle in column-major order, 6 bits per byte,
// each byte offset by 63. For n <= 62 this is the graph6 line.
std::string encode_with_labeling(const Graph& g, const std::vector<int>& lab) {
  int n = g.order();
  std::string out;
  out.push_back(char(n + 63));
  int bit = 5;
  unsigned cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(lab[i], lab[j])) cur |= 1u << bit;
      if (--bit < 0) {
        out.push_back(char(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(char(cur + 63));
  return out;
}

void search(const Graph& g, Cells cells, std::optional<std::string>& best) {
  refine(g, cells);

  bool discrete = true;
  for (const auto& cell : cells)
    if (cell.size() > 1) {
      discrete = false;
      break;
    }

  if (discrete || homogeneous(g, cells)) {
    std::vector<int> lab;
    lab.reserve(g.order());
    for (const auto& cell : cells) lab.insert(lab.end(), cell.begin(), cell.end());
    std::string s = encode_with_labeling(g, lab);
    if (!best || s < *best) best = std::move(s);
    return;
  }

  size_t t = 0;
  while (cells[t].size() == 1) ++t;
  for (int v : cells[t]) {
    Cells child;
    child.reserve(cells.size() + 1);
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c == t) {
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[t].size() - 1);
        for (int u : cells[t])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      } else {
        child.push_back(cells[c]);
      }
    }
    search(g, std::move(child), best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  int n = g.order();
  if (n < 1) fail(ErrorCode::InvalidParameter, "canonical form of empty graph");
  // initial partition: cells by degree, highest degree first
  std::map<int, std::vector<int>, std::greater<int>> by_deg;
  for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [d, verts] : by_deg) cells.push_back(std::move(verts));
  std::optional<std::string> best;
  search(g, std::move(cells), best);
  return *best;
}

Graph from_packed(std::string_view packed) {
  if (packed.empty()) fail(ErrorCode::Parse, "empty packed graph");
  int n = int((unsigned char)packed[0]) - 63;
  Graph g(n);
  size_t pos = 1;
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (pos >= packed.size()) fail(ErrorCode::Parse, "packed graph truncated");
      if (((unsigned char)packed[pos] - 63) >> bit & 1) g.add_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  return g;
}

Graph canonical_representative(const Graph& g) { return from_packed(canonical_form(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace qspectra
