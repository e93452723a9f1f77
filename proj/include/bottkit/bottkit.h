/* C interface to the vanishing-criteria engine. All functions are
 * thread-safe; error details are per-thread. Vertex indices are 1-based.
 * JSON results follow schema "bott-kit/1" and must be released with
 * bk_string_free. */
#ifndef BOTTKIT_H
#define BOTTKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

typedef struct bk_diagram bk_diagram;

typedef enum bk_status {
  BK_OK = 0,
  BK_ERR_PARSE = 2,    /* malformed type string, weight, or document */
  BK_ERR_DOMAIN = 3,   /* precondition violated (singular weight, bad config...) */
  BK_ERR_ORACLE = 4,   /* independent recomputation found a counterexample */
  BK_ERR_INTERNAL = 5, /* invariant breach or unexpected exception */
  BK_ERR_NOMEM = 6,
  BK_ERR_ARGUMENT = 7  /* null pointer or malformed C-level argument */
} bk_status;

/* Message and ErrorCode name for the most recent failure on this thread.
 * Valid until the next bottkit call on the same thread. Empty on success. */
BK_API const char* bk_last_error_message(void);
BK_API const char* bk_last_error_code(void);

BK_API void bk_string_free(char* s);

/* Diagram handles. type_spec e.g. "A4", "B3xG2". */
BK_API bk_status bk_diagram_create(const char* type_spec, bk_diagram** out);
BK_API void bk_diagram_destroy(bk_diagram* d);
BK_API int bk_diagram_rank(const bk_diagram* d);

/* Positive-root listing. */
BK_API bk_status bk_roots_json(const bk_diagram* d, char** out_json);

/* Cohomology of the irreducible bundle with the given highest weight
 * (fcoords, length = rank) on G/P_sigma. */
BK_API bk_status bk_bott_json(const bk_diagram* d, const int* sigma,
                              int sigma_len, const long long* weight,
                              int weight_len, char** out_json);

/* Characters of P_sigma with complement coordinates in [lo, hi]. */
BK_API bk_status bk_line_bundle_table_json(const bk_diagram* d,
                                           const int* sigma, int sigma_len,
                                           long long lo, long long hi,
                                           char** out_json);

/* d(alpha), ell(alpha) per complement vertex plus d(P), ell(P). */
BK_API bk_status bk_invariants_json(const bk_diagram* d, const int* sigma,
                                    int sigma_len, char** out_json);

/* Vanishing range from the significant-root count: H^q = 0 for
 * 0 <= q < ell(A,B) when the weight is negative on A and zero on B. */
BK_API bk_status bk_vanish_main_json(const bk_diagram* d, const int* sigma,
                                     int sigma_len, const long long* weight,
                                     int weight_len, const int* a, int a_len,
                                     const int* b, int b_len, char** out_json);

/* H^q = 0 for 0 < q < ell(P) when generating_dim < d(P). */
BK_API bk_status bk_vanish_h1_json(const bk_diagram* d, const int* sigma,
                                   int sigma_len, long long generating_dim,
                                   char** out_json);

/* Completely reducible fiber: weights_flat holds n_weights rows of length
 * rank (row-major). */
BK_API bk_status bk_vanish_semi_json(const bk_diagram* d, const int* sigma,
                                     int sigma_len,
                                     const long long* weights_flat,
                                     int n_weights, char** out_json);

/* Brute-force index-bound check over a coordinate box. threads >= 1;
 * max_exhaustive bounds the box size enumerated exhaustively (larger boxes
 * are sampled with the given seed). */
BK_API bk_status bk_sweep_json(const bk_diagram* d, const int* sigma,
                               int sigma_len, const int* a, int a_len,
                               const int* b, int b_len, long long lo,
                               long long hi, unsigned long long seed,
                               unsigned long long max_exhaustive, int threads,
                               char** out_json);

/* Scalar conveniences. */
BK_API bk_status bk_weyl_dimension(const bk_diagram* d, const long long* weight,
                                   int weight_len, char** out_decimal);
BK_API bk_status bk_parabolic_dp_lp(const bk_diagram* d, const int* sigma,
                                    int sigma_len, long long* out_d_p,
                                    long long* out_ell_p);
BK_API bk_status bk_rigidity(const bk_diagram* d, const int* sigma,
                             int sigma_len, long long generating_dim,
                             int* out_rigid);

#ifdef __cplusplus
}
#endif

#endif /* BOTTKIT_H */
