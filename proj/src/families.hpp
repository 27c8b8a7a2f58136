#pragma once

#include <string_view>
#include <vector>

#include "exactmat.hpp"
#include "graph.hpp"

namespace qspectra {

// The split-like graph G_n built from cliques K_ceil(n/2) and K_floor(n/2)
// with nested cross-neighborhoods. Labels are v_1..v_ceil(n/2) followed by
// w_1..w_floor(n/2). Construction is post-validated against the defining
// closed-neighborhood conditions and fails (Construction) if any is violated.
Graph build_gn(int n);

// Same graph relabeled in the order the quotient matrices are written in:
// v_1, ..., v_ceil(s/2), w_floor(s/2), ..., w_1. For s = 3, 4 this is the
// path order 0-1-2(-3).
Graph gn_pattern(int s);

struct CliqueReplacementSpec {
  Graph base;
  std::vector<int> t;  // block sizes, one per base vertex
};

// Blow each base vertex i into a clique of t[i] vertices; blocks occupy
// consecutive labels in base-vertex order, cross-block edges are complete
// exactly when the base edge is present.
Graph replace_cliques(const CliqueReplacementSpec& spec);

struct QuotientMatrix {
  IntMatrix b;  // generally non-symmetric; spectrum accessed via charpoly only
  std::vector<int> block_degrees;
  std::vector<int> block_sizes;
};

// B_ii = deg_i + (t_i - 1), B_ij = t_j on base edges, 0 otherwise. deg_i is
// measured from the constructed graph; equal degrees inside every block are
// asserted.
QuotientMatrix quotient_matrix(const CliqueReplacementSpec& spec);

// G_s[K_{t_1},...,K_{t_s}] with t indexed in the gn_pattern order used
// throughout the quotient-matrix identities.
Graph gs_replacement(int s, const std::vector<int>& t);
QuotientMatrix gs_quotient(int s, const std::vector<int>& t);

// The printed parameter matrices. They equal the quotient matrices of
// G_3[K_t,K_1,K_t], G_4[K_r,K_1,K_1,K_r] and G_3[K_t,K_2,K_t] whenever those
// graphs fit the order cap, but stay constructible for any parameter.
IntMatrix b3_matrix(long t);
IntMatrix b4_matrix(long r);
IntMatrix bprime_matrix(long t);

// Fixed companion graphs of the m[0, d_1] analysis: "fig-n6" (the 3-regular
// prism arising at n = 6), "H1" and "H2" (the 5-vertex induced subgraphs with
// pinned adjacency matrices; H2 = H1 plus the edge between the last two
// vertices).
Graph proof_graph(std::string_view id);

}  // namespace qspectra
