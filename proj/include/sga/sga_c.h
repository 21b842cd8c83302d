#ifndef SGA_C_H
#define SGA_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Signed-graph analysis library, C interface.
 *
 * All functions return a status code. On failure, *err (when requested)
 * receives a malloc'd message; release it with sga_string_free. Output
 * strings are also released with sga_string_free. */

enum {
    SGA_OK = 0,
    SGA_ERR_PARSE = 2,      /* malformed graph JSON */
    SGA_ERR_UNKNOWN = 3,    /* no decision procedure settled the instance */
    SGA_ERR_HYPOTHESIS = 4, /* input violates the operation's precondition */
    SGA_ERR_RANGE = 5,      /* instance too large for the exact oracle */
    SGA_ERR_INTERNAL = 6
};

typedef struct sga_graph sga_graph;

/* Graph I/O. Canonical JSON:
 * {"vertices":[1,2],"positive":[[1,2]],"negative":[],"loops":[1]} */
int sga_graph_parse(const char* json, sga_graph** out, char** err);
void sga_graph_free(sga_graph* g);
int sga_graph_to_json(const sga_graph* g, char** out);

/* Full verdict (balanced chordality, supersolvability, freeness, provenance)
 * as a JSON object. verify != 0 additionally runs the derivation-module
 * oracle when the instance is small enough and records the comparison.
 * Returns SGA_ERR_UNKNOWN when freeness stays undecided. */
int sga_analyze(const sga_graph* g, int verify, char** json_out, char** err);

/* Signed chromatic polynomial / lattice characteristic polynomial as a JSON
 * array of coefficient strings, constant term first. */
int sga_chromatic(const sga_graph* g, char** json_out, char** err);
int sga_characteristic(const sga_graph* g, char** json_out, char** err);

/* Exact freeness oracle (dimension <= 5, at most 16 hyperplanes). */
int sga_freeness(const sga_graph* g, char** json_out, char** err);

/* Supersolvability decision with certificate. */
int sga_supersolvable(const sga_graph* g, char** json_out, char** err);

/* Balanced chordality; JSON includes the witness cycle when negative. */
int sga_balanced_chordal(const sga_graph* g, char** json_out, char** err);

/* Clique-separator graph of the positive part as DOT text.
 * SGA_ERR_HYPOTHESIS with a chordless-cycle witness when not chordal. */
int sga_csg_dot(const sga_graph* g, char** dot_out, char** err);

/* Random graph generation. edge_class: "general" or "doubled".
 * loop_policy: "none", "full" or "random". Deterministic per seed. */
int sga_random_graph(int n, uint64_t seed, const char* edge_class, const char* loop_policy,
                     char** json_out, char** err);

/* Theorem-vs-oracle comparison harness. mode: "chromatic", "main-theorem"
 * or "er". Returns SGA_ERR_INTERNAL if any disagreement is found; the report
 * lists every disagreeing graph. */
int sga_crosscheck(const char* mode, int max_n, uint64_t seed, int samples, char** report_out,
                   char** err);

void sga_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SGA_C_H */
