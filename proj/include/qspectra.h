/*
 * qspectra - exact signless Laplacian eigenvalue distribution toolkit.
 *
 * C API over the C++ core. All handles are opaque; every function that can
 * fail returns a qs_status, with results passed through out-parameters.
 * Strings returned through char** out-parameters are allocated by the
 * library and must be released with qs_string_free(). A human-readable
 * message for the most recent failure on the calling thread is available
 * from qs_last_error().
 */
#ifndef QSPECTRA_H
#define QSPECTRA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
  QS_OK = 0,
  QS_ERROR_INVALID_PARAMETER = 1,
  QS_ERROR_NOT_AN_EDGE = 2,
  QS_ERROR_PARSE = 3,
  QS_ERROR_UNKNOWN_ID = 4,
  QS_ERROR_CONSTRUCTION = 5,
  QS_ERROR_INTERNAL = 6,
  QS_ERROR_BUFFER_TOO_SMALL = 7
} qs_status;

typedef struct qs_graph qs_graph;
typedef struct qs_stream qs_stream;

const char* qs_version(void);

/* Message for the last failure on this thread; valid until the next failing
 * call on the same thread. */
const char* qs_last_error(void);

void qs_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Build a graph from the expression language, e.g. "K(4)", "2*K(2)",
 * "union(K(1),C(5))", "Gs(3)[2,1,2]", "Kminus(4)", "g6:Bw",
 * "proof(fig-n6)". */
qs_status qs_graph_from_expr(const char* expr, qs_graph** out);
qs_status qs_graph_from_graph6(const char* text, qs_graph** out);
void qs_graph_free(qs_graph* g);

int qs_graph_order(const qs_graph* g);
int qs_graph_edge_count(const qs_graph* g);
int qs_graph_connected(const qs_graph* g);
int qs_graph_isomorphic(const qs_graph* a, const qs_graph* b);

/* Degree sequence in nonincreasing order; cap must be >= order. */
qs_status qs_graph_degrees(const qs_graph* g, int* out, size_t cap);

/* Standard graph6 line (single-byte size form, order <= 62). */
qs_status qs_graph_to_graph6(const qs_graph* g, char* buf, size_t cap);

/* {"n", "edges", "degrees", "edge_list", "graph6"} */
qs_status qs_graph_info_json(const qs_graph* g, char** out);

/* ---- spectra and interval counts ------------------------------------- */

/* Signless Laplacian eigenvalues as floats, descending; cap >= order. */
qs_status qs_spectrum(const qs_graph* g, double* out, size_t cap);

/* {"n", "spectrum", "charpoly" (integer coefficient strings, ascending),
 *  "integer_eigenvalues": [{"value", "multiplicity"}, ...],
 *  "irrational_factors": [{"factor", "multiplicity"}, ...]} */
qs_status qs_spectrum_json(const qs_graph* g, char** out);

/* Exact count of signless Laplacian eigenvalues in the closed interval
 * [lo, hi]. Endpoints accept integers, rationals "p/q", or the symbols
 * d1..dn, dn, dmax, 2n-2 resolved against g's degree sequence. With
 * paranoid != 0 the Sturm path and the snapped float path are run as well
 * and any disagreement is an internal error. out_json (optional) receives
 * {"lo","hi","count","method","near_endpoint"}. */
qs_status qs_count_interval(const qs_graph* g, const char* lo, const char* hi, int paranoid,
                            int* out_count, char** out_json);

/* ---- structured families ---------------------------------------------- */

qs_status qs_family_gn(int n, qs_graph** out);
qs_status qs_family_gs(int s, const int* t, size_t t_len, qs_graph** out);

/* {"s", "t", "block_degrees", "B" (row-major integer matrix),
 *  "charpoly" (of B, coefficient strings ascending)} */
qs_status qs_family_gs_quotient_json(int s, const int* t, size_t t_len, char** out);

/* ---- isomorph-free enumeration ---------------------------------------- */

/* One representative per isomorphism class of order n (1 <= n <= 9),
 * canonical graph6 ascending. connected_only != 0 keeps connected classes. */
qs_status qs_enumerate_begin(int n, int connected_only, qs_stream** out);

/* Returns 1 and writes the next graph6 line into buf; 0 at end of stream;
 * -1 on error (see qs_last_error). */
int qs_stream_next(qs_stream* s, char* buf, size_t cap);
void qs_stream_free(qs_stream* s);

/* ---- theorem verification and open-problem searches ------------------- */

/* Known ids, one per line. */
qs_status qs_theorem_ids(char** out);

/* Runs one registered checker up to max_n (enumeration-backed checkers; the
 * fixed-sweep identities ignore max_n) and returns the report as JSON:
 * {"theorem_id","n_min","n_max","graphs_checked","status",
 *  "counterexamples","witnesses","runtime_ms"}.
 * jobs <= 0 selects QSPECTRA_JOBS or the hardware default. */
qs_status qs_verify_json(const char* theorem_id, int max_n, int jobs, char** out);

/* problem_id is "P1" (m[d_n, 2n-2] = 3) or "P2" (connected, m[0, d_1] = 3);
 * same report shape with the hits as witnesses per order. */
qs_status qs_search_json(const char* problem_id, int max_n, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSPECTRA_H */
