#pragma once

#include <vector>

#include "exactmat.hpp"
#include "graph.hpp"

namespace qspectra {

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix signless_laplacian(const Graph& g);  // Q = A + D

// #{q_i >= t} and #{q_i > t}, exact, from one congruence pass on Q - tI.
struct ShiftCounts {
  int ge = 0, gt = 0;
};
ShiftCounts q_shift_counts(const Graph& g, const Rat& t);

enum class CountMethod { Inertia, Sturm };

struct IntervalCount {
  Rat lo, hi;
  int count = 0;
  CountMethod method = CountMethod::Inertia;
  // paranoid mode only: float eigenvalues within 1e-8 of an endpoint
  std::vector<double> near_endpoint;
};

// m_G[lo, hi], closed at both ends. Default path is two inertia passes;
// paranoid additionally runs the Sturm count and the snapped float count and
// fails (Internal) on any disagreement.
IntervalCount m_interval(const Graph& g, const Rat& lo, const Rat& hi, bool paranoid = false);

std::vector<double> q_spectrum(const Graph& g);  // Jacobi floats, descending
double q_k(const Graph& g, int k);               // 1-indexed, float

enum class Cmp { Less, Equal, Greater };
Cmp q_k_cmp(const Graph& g, int k, const Rat& t);  // q_k versus t, decided exactly

// Inertia of the adjacency matrix; the sign data behind the Oboudi case split.
struct AdjSignature {
  int n_pos = 0, n_zero = 0, n_neg = 0;
  int order() const { return n_pos + n_zero + n_neg; }
  // sign of the k-th largest adjacency eigenvalue (1-indexed)
  int lambda_sign(int k) const;
};
AdjSignature adj_signature(const Graph& g);

// charpoly(Q(g)) == claimed, exact coefficient equality; claimed must be monic
// of degree n.
bool spectrum_multiset_eq(const Graph& g, const IntPoly& claimed);

}  // namespace qspectra
