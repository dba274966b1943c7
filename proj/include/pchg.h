/*
 * pchg — perfect colorings of hypergraphs.
 *
 * C interface to the pchg core. Objects are opaque handles created from the
 * documented JSON formats and released with the matching _free call; every
 * function returns a pchg_status, with results passed through out-parameters.
 * Strings returned through char** are heap-allocated JSON documents and must
 * be released with pchg_string_free. On failure the thread-local error state
 * carries a human-readable message (pchg_last_error_message) and a JSON
 * error object (pchg_last_error_json).
 */

#ifndef PCHG_H
#define PCHG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pchg_status {
    PCHG_OK = 0,
    PCHG_ERR_VALIDATION = 2,
    PCHG_ERR_NOT_PERFECT = 3,
    PCHG_ERR_NOT_A_COVERING = 4,
    PCHG_ERR_GUARD = 5,
    PCHG_ERR_IO = 6,
    PCHG_ERR_INTERNAL = 7
} pchg_status;

typedef struct pchg_hypergraph pchg_hypergraph;
typedef struct pchg_coloring pchg_coloring;
typedef struct pchg_matrix pchg_matrix;
typedef struct pchg_covering pchg_covering;

/* --- error state ------------------------------------------------------- */

const char* pchg_last_error_message(void);
/* {"status":"error","code":<int>,"message":...} plus optional detail. */
const char* pchg_last_error_json(void);

void pchg_string_free(char* text);

/* --- hypergraphs -------------------------------------------------------- */

pchg_status pchg_hypergraph_from_json(const char* json, pchg_hypergraph** out);
pchg_status pchg_hypergraph_to_json(const pchg_hypergraph* h, char** out);
void pchg_hypergraph_free(pchg_hypergraph* h);
int pchg_hypergraph_vertex_count(const pchg_hypergraph* h);
int pchg_hypergraph_edge_count(const pchg_hypergraph* h);

pchg_status pchg_incidence_matrix_json(const pchg_hypergraph* h, char** out);
pchg_status pchg_dual(const pchg_hypergraph* h, pchg_hypergraph** out);
pchg_status pchg_profile_json(const pchg_hypergraph* h, char** out);
pchg_status pchg_is_connected(const pchg_hypergraph* h, int* out);
pchg_status pchg_incidence_graph(const pchg_hypergraph* h, pchg_hypergraph** out);
pchg_status pchg_adjacency_tensor(const pchg_hypergraph* h, pchg_matrix** out);
pchg_status pchg_transversals_json(const pchg_hypergraph* h, int k, int threads, char** out);

/* --- colorings ----------------------------------------------------------- */

pchg_status pchg_coloring_from_json(const char* json, pchg_coloring** out);
pchg_status pchg_coloring_to_json(const pchg_coloring* f, char** out);
void pchg_coloring_free(pchg_coloring* f);

pchg_status pchg_is_perfect(const pchg_hypergraph* h, const pchg_coloring* f, int* out);
pchg_status pchg_verify_json(const pchg_hypergraph* h, const pchg_coloring* f, char** out);
pchg_status pchg_params_json(const pchg_hypergraph* h, const pchg_coloring* f, char** out);
pchg_status pchg_parameter_tensor(const pchg_hypergraph* h, const pchg_coloring* f,
                                  pchg_matrix** out);
pchg_status pchg_construct_json(const char* params_json, char** out);
pchg_status pchg_wl_refine(const pchg_hypergraph* h, const pchg_coloring* seed,
                           pchg_coloring** out);

/* --- multidimensional matrices ------------------------------------------ */

pchg_status pchg_matrix_from_json(const char* json, pchg_matrix** out);
pchg_status pchg_matrix_to_json(const pchg_matrix* a, char** out);
void pchg_matrix_free(pchg_matrix* a);
pchg_status pchg_identity_tensor(int dim, int order, pchg_matrix** out);
pchg_status pchg_mm_product(const pchg_matrix* a, const pchg_matrix* b, int threads,
                            pchg_matrix** out);
pchg_status pchg_matrix_is_symmetric(const pchg_matrix* a, int* out);

/* --- coverings ------------------------------------------------------------ */

pchg_status pchg_covering_from_json(const char* json, pchg_covering** out);
void pchg_covering_free(pchg_covering* phi);
/* Optional file references carried by the map JSON; empty string when unset.
 * The returned pointer stays valid while the handle lives. */
const char* pchg_covering_source(const pchg_covering* phi);
const char* pchg_covering_target(const pchg_covering* phi);
pchg_status pchg_cover_verify_json(const pchg_hypergraph* g, const pchg_hypergraph* h,
                                   const pchg_covering* phi, char** out);
pchg_status pchg_cover_common_json(const pchg_hypergraph* h1, const pchg_coloring* f1,
                                   const pchg_hypergraph* h2, const pchg_coloring* f2,
                                   char** out);
pchg_status pchg_cover_multipartite_json(const pchg_hypergraph* h, char** out);
pchg_status pchg_lift_coloring(const pchg_covering* phi, const pchg_coloring* f,
                               pchg_coloring** out);

/* --- spectra ---------------------------------------------------------------- */

pchg_status pchg_eigen_json(const pchg_matrix* s, char** out);
/* chi: "p/q" string, or NULL to infer it from the matrix. */
pchg_status pchg_charpoly_json(const pchg_matrix* s, const char* chi, char** out);
pchg_status pchg_charpoly_coloring_json(const pchg_hypergraph* h, const pchg_coloring* f,
                                        char** out);
pchg_status pchg_transversal_tensor(int d, int r, int k, pchg_matrix** out);
pchg_status pchg_transversal_spectrum_json(int d, int r, int k, char** out);

/* --- demo scenarios ---------------------------------------------------------- */

pchg_status pchg_demo_fano_json(char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PCHG_H */
