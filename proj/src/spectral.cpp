#include "spectral.hpp"

#include <cmath>

namespace qspectra {

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) a.at(i, j) = g.has_edge(i, j) ? 1 : 0;
  return a;
}

IntMatrix signless_laplacian(const Graph& g) {
  IntMatrix q = adjacency_matrix(g);
  for (int i = 0; i < g.order(); ++i) q.at(i, i) = g.degree(i);
  return q;
}

ShiftCounts q_shift_counts(const Graph& g, const Rat& t) {
  const int n = g.order();
  RatMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m.at(i, j) = Rat(g.degree(i)) - t;
      else
        m.at(i, j) = g.has_edge(i, j) ? Rat(1) : Rat(0);
    }
  Inertia in = inertia(m);
  return {in.n_plus + in.n_zero, in.n_plus};
}

IntervalCount m_interval(const Graph& g, const Rat& lo, const Rat& hi, bool paranoid) {
  if (lo > hi) fail(ErrorCode::InvalidParameter, "interval endpoints out of order");
  IntervalCount out;
  out.lo = lo;
  out.hi = hi;
  out.count = q_shift_counts(g, lo).ge - q_shift_counts(g, hi).gt;
  out.method = CountMethod::Inertia;
  if (!paranoid) return out;

  int sturm = count_roots_in(charpoly(signless_laplacian(g)), lo, hi);
  if (sturm != out.count) fail(ErrorCode::Internal, "inertia and Sturm interval counts disagree");

  const double a = static_cast<double>(lo), b = static_cast<double>(hi);
  const double tol = 1e-8;
  int snapped = 0;
  for (double ev : q_spectrum(g)) {
    double v = ev;
    if (std::abs(v - a) <= tol || std::abs(v - b) <= tol) {
      out.near_endpoint.push_back(ev);
      v = std::abs(v - a) <= tol ? a : b;
    }
    if (v >= a && v <= b) ++snapped;
  }
  if (snapped != out.count)
    fail(ErrorCode::Internal, "float eigenvalue count disagrees after endpoint snapping");
  return out;
}

std::vector<double> q_spectrum(const Graph& g) { return eig_sym_float(signless_laplacian(g)); }

double q_k(const Graph& g, int k) {
  if (k < 1 || k > g.order()) fail(ErrorCode::InvalidParameter, "eigenvalue index out of range");
  return q_spectrum(g)[k - 1];
}

Cmp q_k_cmp(const Graph& g, int k, const Rat& t) {
  if (k < 1 || k > g.order()) fail(ErrorCode::InvalidParameter, "eigenvalue index out of range");
  ShiftCounts c = q_shift_counts(g, t);
  if (c.gt >= k) return Cmp::Greater;  // q_k > t
  if (c.ge >= k) return Cmp::Equal;    // q_k >= t but not > t
  return Cmp::Less;
}

int AdjSignature::lambda_sign(int k) const {
  if (k < 1 || k > order()) fail(ErrorCode::InvalidParameter, "eigenvalue index out of range");
  if (k <= n_pos) return 1;
  if (k <= n_pos + n_zero) return 0;
  return -1;
}

AdjSignature adj_signature(const Graph& g) {
  Inertia in = inertia(adjacency_matrix(g));
  return {in.n_plus, in.n_zero, in.n_minus};
}

bool spectrum_multiset_eq(const Graph& g, const IntPoly& claimed) {
  if (claimed.degree() != g.order() || claimed.leading() != 1)
    fail(ErrorCode::InvalidParameter, "claimed polynomial must be monic of degree n");
  return charpoly(signless_laplacian(g)) == claimed;
}

}  // namespace qspectra
