/* C interface to the interval-colouring library. Handles are opaque; every
 * call returns an ilab_status and, on failure, leaves a message retrievable
 * with ilab_last_error() on the calling thread. Strings returned through
 * char** are owned by the caller and released with ilab_string_free(). */
#ifndef ILAB_ILAB_H
#define ILAB_ILAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(ILAB_BUILDING_LIBRARY)
#define ILAB_API __attribute__((visibility("default")))
#else
#define ILAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ilab_graph ilab_graph;
typedef struct ilab_colouring ilab_colouring;

typedef enum ilab_status {
  ILAB_OK = 0,
  ILAB_INVALID_ARGUMENT = 1,
  ILAB_PARSE = 2,
  ILAB_PRECONDITION = 3,
  ILAB_BUDGET = 4,
  ILAB_IO = 5,
  ILAB_INTERNAL = 6
} ilab_status;

/* Result of a decision-style operation; values match the CLI exit codes. */
typedef enum ilab_outcome {
  ILAB_FOUND = 0,
  ILAB_NEGATIVE = 1,
  ILAB_BUDGET_EXHAUSTED = 3
} ilab_outcome;

ILAB_API const char* ilab_version(void);
ILAB_API const char* ilab_last_error(void);
ILAB_API void ilab_string_free(char* s);

/* Graphs. Text or JSON input, auto-detected. */
ILAB_API ilab_status ilab_graph_parse(const char* text, ilab_graph** out);
ILAB_API ilab_status ilab_graph_load(const char* path, ilab_graph** out);
/* pairs holds 2*m vertex ids. */
ILAB_API ilab_status ilab_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, ilab_graph** out);
ILAB_API void ilab_graph_free(ilab_graph* g);
ILAB_API size_t ilab_graph_vertex_count(const ilab_graph* g);
ILAB_API size_t ilab_graph_edge_count(const ilab_graph* g);
ILAB_API ilab_status ilab_graph_edge(const ilab_graph* g, size_t e, uint32_t* u, uint32_t* v);
ILAB_API ilab_status ilab_graph_serialize(const ilab_graph* g, int as_json, char** out);
/* -1 when disconnected. */
ILAB_API ilab_status ilab_graph_diameter(const ilab_graph* g, int64_t* out);

/* Colourings carry their graph. */
ILAB_API ilab_status ilab_colouring_parse(const char* text, ilab_colouring** out);
ILAB_API ilab_status ilab_colouring_load(const char* path, ilab_colouring** out);
ILAB_API ilab_status ilab_colouring_create(const ilab_graph* g, const int64_t* colours, size_t count,
                                           ilab_colouring** out);
ILAB_API void ilab_colouring_free(ilab_colouring* c);
ILAB_API ilab_status ilab_colouring_get(const ilab_colouring* c, size_t e, int64_t* out);
ILAB_API ilab_status ilab_colouring_graph(const ilab_colouring* c, ilab_graph** out);
ILAB_API ilab_status ilab_colouring_serialize(const ilab_colouring* c, int as_json, char** out);
ILAB_API ilab_status ilab_colouring_verify(const ilab_colouring* c, int* proper, int* interval, size_t* distinct);

/* Operations. Each writes a JSON report with a "summary" line. */
ILAB_API ilab_status ilab_check(const ilab_graph* g, const ilab_colouring* c, ilab_outcome* outcome, char** report);

typedef struct ilab_solve_options {
  const char* mode;            /* "colourable", "tmax", "theta" or "peel" */
  int64_t max_colours;         /* <= 0: default 2n */
  size_t kmax;                 /* theta only; 0: edge count */
  uint64_t node_limit;         /* 0: default */
  double time_limit_seconds;   /* <= 0: default */
} ilab_solve_options;

ILAB_API ilab_status ilab_solve(const ilab_graph* g, const ilab_solve_options* options, ilab_outcome* outcome,
                                char** report);

/* threads 0: one per layer. */
ILAB_API ilab_status ilab_decompose(const ilab_graph* g, double delta, uint64_t seed, unsigned threads,
                                    char** report);

/* preset != 0 ignores delta and epsilon. Writes the layered graph as JSON. */
ILAB_API ilab_status ilab_gen_lower(size_t r, size_t n, double delta, double epsilon, int preset, uint64_t seed,
                                    char** graph_json);

/* Independent uniform part per edge; writes the partition in text form. */
ILAB_API ilab_status ilab_gen_partition(const char* graph, size_t parts, uint64_t seed, char** partition);

ILAB_API ilab_status ilab_gen_planar(size_t s, const size_t* removed, size_t removed_count, int odd,
                                     ilab_colouring** out);

/* layered_json from ilab_gen_lower; partition in text or JSON form. */
ILAB_API ilab_status ilab_probe(const char* layered_json, const char* partition, double budget_scale,
                                ilab_outcome* outcome, char** report);

ILAB_API ilab_status ilab_split(const ilab_colouring* c, ilab_outcome* outcome, char** report);

ILAB_API ilab_status ilab_bound(const ilab_graph* g, double k, uint64_t node_limit, double time_limit_seconds,
                                ilab_outcome* outcome, char** report);

ILAB_API ilab_status ilab_objective(double delta, double step, char** report);

#ifdef __cplusplus
}
#endif

#endif
