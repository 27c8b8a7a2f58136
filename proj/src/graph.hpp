#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace qspectra {

inline constexpr int kMaxOrder = 64;

// Simple undirected graph on vertex labels 0..n-1. Adjacency is one bitmask
// row per vertex, so neighborhood operations are single-word arithmetic.
// Graphs are value types; once a builder returns one it is never mutated.
class Graph {
 public:
  Graph() { rows_.fill(0); }
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder) fail(ErrorCode::InvalidParameter, "graph order must be in 1..64");
    rows_.fill(0);
  }

  int order() const { return n_; }
  uint64_t row(int v) const { return rows_[v]; }
  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1u; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  uint64_t vertex_mask() const { return n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1); }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  void add_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] |= uint64_t{1} << j;
    rows_[j] |= uint64_t{1} << i;
  }
  void remove_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] &= ~(uint64_t{1} << j);
    rows_[j] &= ~(uint64_t{1} << i);
  }

  bool operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (rows_[v] != o.rows_[v]) return false;
    return true;
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
      fail(ErrorCode::InvalidParameter, "vertex pair out of range");
  }

  int n_ = 0;
  std::array<uint64_t, kMaxOrder> rows_{};
};

// Named families. Labeling is fixed: P_n is 0-1-...-(n-1), C_n closes it,
// S_n is centered at 0, multipartite parts occupy consecutive label blocks.
Graph edgeless(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph complete_multipartite(const std::vector<int>& parts);

// Combinators. disjoint_union relabels h by an offset of g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join_graphs(const Graph& g, const Graph& h);
Graph delete_edge(const Graph& g, int i, int j);
Graph induced_subgraph(const Graph& g, uint64_t keep);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph relabel(const Graph& g, const std::vector<int>& perm);  // perm[old] = new label

std::vector<int> degree_sequence(const Graph& g);  // descending
int degree_k(const Graph& g, int k);               // d_k, 1-indexed; throws if k out of 1..n
int independence_number(const Graph& g);
bool is_connected(const Graph& g);

// Canonical labeling by partition refinement with backtracking (canon.cpp).
// The form is the lexicographically smallest packed adjacency string over the
// refinement leaves; for n <= 62 it is exactly the graph6 line of the
// canonically relabeled graph.
std::string canonical_form(const Graph& g);
Graph from_packed(std::string_view packed);  // inverse of the packed form, unvalidated
Graph canonical_representative(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace qspectra
