/*
 * C interface to the d-walk regularity library.
 *
 * Graphs and analysis results are opaque handles owned by the caller and
 * released with the matching *_destroy function. Every function returns
 * DWR_OK (0) on success or a negative DWR_ERROR_* code; the message for the
 * most recent failure on the calling thread is available from
 * dwr_last_error_message().
 *
 * Functions that produce text follow one convention: on entry *out_len holds
 * the capacity of out; on return it holds the number of bytes required
 * including the terminating NUL. If the capacity is too small nothing is
 * written and DWR_ERROR_INSUFFICIENT_BUFFER is returned. out may be NULL
 * when *out_len is 0, to query the size.
 */
#ifndef DWALK_DWALK_H_
#define DWALK_DWALK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DWR_API __declspec(dllexport)
#else
#  define DWR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum dwr_error_code {
  DWR_OK = 0,
  DWR_ERROR_INVALID_ARGUMENT = -1,
  DWR_ERROR_NULL_POINTER = -2,
  DWR_ERROR_INSUFFICIENT_BUFFER = -3,
  DWR_ERROR_MALFORMED_GRAPH6 = -10,
  DWR_ERROR_GRAPH_TOO_LARGE = -11,
  DWR_ERROR_INVALID_FAMILY = -12,
  DWR_ERROR_NO_SUCH_VERTEX = -13,
  DWR_ERROR_NO_SUCH_EDGE = -14,
  DWR_ERROR_DIMENSION_MISMATCH = -20,
  DWR_ERROR_NON_MONIC_MODULUS = -21,
  DWR_ERROR_TRUNCATION_TOO_SHORT = -22,
  DWR_ERROR_DISCONNECTED = -30,
  DWR_ERROR_EMPTY_DISTANCE_CLASS = -31,
  DWR_ERROR_DISTANCE_OUT_OF_RANGE = -32,
  DWR_ERROR_GRAPH_TOO_LARGE_FOR_KRON = -33,
  DWR_ERROR_INSUFFICIENT_HISTORY = -34,
  DWR_ERROR_NOT_WALK_REGULAR = -35,
  DWR_ERROR_NOT_REGULAR_GRAPH = -36,
  DWR_ERROR_ORACLE_TOO_LARGE = -37,
  DWR_ERROR_INTERNAL = -99,
};

/* Check selection bits for dwr_options.checks. */
#define DWR_CHECK_WINDOW    (1u << 0)
#define DWR_CHECK_SCHUR     (1u << 1)
#define DWR_CHECK_KRON      (1u << 2)
#define DWR_CHECK_EXP       (1u << 3)
#define DWR_CHECK_PROP4     (1u << 4)
#define DWR_CHECK_PROP5     (1u << 5)
#define DWR_CHECK_PROP6     (1u << 6)
#define DWR_CHECK_GM        (1u << 7)
#define DWR_CHECK_UNFOLDED  (1u << 8)
#define DWR_CHECK_ALL       ((1u << 9) - 1)

/* Verdicts, as returned by dwr_check_window. */
#define DWR_VERDICT_REGULAR      0
#define DWR_VERDICT_NOT_REGULAR  1
#define DWR_VERDICT_INCONCLUSIVE 2

typedef struct dwr_graph_struct* dwr_graph_t;
typedef struct dwr_report_struct* dwr_report_t;

typedef struct dwr_options {
  uint32_t checks;
  /* Distance classes to analyse; d_count == 0 selects 0..diameter. */
  const size_t* d_list;
  size_t d_count;
  /* Truncation order for the exponential check; 0 picks the default. */
  size_t exp_truncation;
  int oracle_validate;
} dwr_options;

DWR_API const char* dwr_error_description(int code);
DWR_API const char* dwr_last_error_message(void);
DWR_API const char* dwr_version_string(void);

/* Comma separated check names ("window,schur,...") or "all". */
DWR_API int dwr_parse_checks(const char* list, uint32_t* checks);

DWR_API int dwr_graph_from_graph6(dwr_graph_t* graph, const char* text);
/* Family specs: "complete:N", "cycle:m", "path:m", "complete_bipartite:p,q",
 * "petersen", "hamming:d,q", "johnson:n,k", "cartesian_cycle_square:m",
 * "unfolded_complete:N". */
DWR_API int dwr_graph_from_family(dwr_graph_t* graph, const char* spec);
DWR_API int dwr_graph_from_edges(dwr_graph_t* graph, size_t n, const size_t* endpoints,
                                 size_t edge_count);
DWR_API int dwr_graph_destroy(dwr_graph_t graph);

DWR_API int dwr_graph_order(const dwr_graph_t graph, size_t* n);
DWR_API int dwr_graph_edge_count(const dwr_graph_t graph, size_t* m);
DWR_API int dwr_graph_adjacent(const dwr_graph_t graph, size_t u, size_t v, int* adjacent);
/* Diameter of a connected graph; DWR_ERROR_DISCONNECTED otherwise. */
DWR_API int dwr_graph_diameter(const dwr_graph_t graph, size_t* diameter);
DWR_API int dwr_graph_to_graph6(const dwr_graph_t graph, char* out, size_t* out_len);
DWR_API int dwr_graph_label(const dwr_graph_t graph, char* out, size_t* out_len);

/* Authoritative verdict for one distance class. */
DWR_API int dwr_check_window(const dwr_graph_t graph, size_t d, int* verdict);
DWR_API int dwr_godsil_mckay(const dwr_graph_t graph, int* walk_regular);
/* Walk count between i and j by enumeration (n <= 12, k <= 10). */
DWR_API int dwr_walk_count_oracle(const dwr_graph_t graph, size_t i, size_t j, size_t k,
                                  char* out, size_t* out_len);

/* Full per-graph analysis. options may be NULL (window check on every d);
   graph_id may be NULL. */
DWR_API int dwr_analyze(dwr_report_t* report, const dwr_graph_t graph,
                        const dwr_options* options, const char* graph_id);
DWR_API int dwr_report_destroy(dwr_report_t report);
DWR_API int dwr_report_json(const dwr_report_t report, char* out, size_t* out_len);
/* 1 when checkers that must agree disagreed on this graph. */
DWR_API int dwr_report_inconsistent(const dwr_report_t report, int* inconsistent);

#ifdef __cplusplus
}
#endif

#endif  // DWALK_DWALK_H_
