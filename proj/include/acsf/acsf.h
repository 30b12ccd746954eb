/* acsf - automatic-complexity structure functions, run-model statistics
 * and entropy bounds for finite words.
 *
 * C interface of the shared library. All rich results are returned as
 * JSON or CSV strings owned by the library; release them with
 * acsf_string_free. Functions return ACSF_OK on success; on failure,
 * acsf_last_error() describes the problem for the calling thread.
 */
#ifndef ACSF_H
#define ACSF_H

#include <stdint.h>

#if defined(_WIN32)
#define ACSF_API __declspec(dllexport)
#else
#define ACSF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acsf_status {
    ACSF_OK = 0,
    ACSF_ERROR_INVALID_ARGUMENT = 1,
    ACSF_ERROR_LIMIT_EXCEEDED = 2,
    ACSF_ERROR_INVARIANT = 3,
    ACSF_ERROR_IO = 4,
} acsf_status;

typedef struct acsf_word acsf_word;     /* an immutable parsed word */
typedef struct acsf_config acsf_config; /* search limits */

ACSF_API const char* acsf_version(void);

/* thread-local message for the most recent failure */
ACSF_API const char* acsf_last_error(void);

ACSF_API void acsf_string_free(char* text);

/* -- words ------------------------------------------------------------ */

/* text is a digit string or a comma-separated symbol list;
 * alphabet_size 0 infers b = max symbol + 1 */
ACSF_API acsf_status acsf_word_parse(const char* text, int alphabet_size, acsf_word** out);
ACSF_API void acsf_word_free(acsf_word* word);
ACSF_API int acsf_word_length(const acsf_word* word);
ACSF_API int acsf_word_alphabet_size(const acsf_word* word);

/* maximal runs of the word over every nonempty valence, as JSON */
ACSF_API acsf_status acsf_maximal_runs_json(const acsf_word* word, char** out_json);

/* -- configuration ---------------------------------------------------- */

ACSF_API acsf_status acsf_config_create(acsf_config** out);
ACSF_API void acsf_config_free(acsf_config* config);
/* keys: exact_limit_b2, exact_limit_b3, exact_limit_other */
ACSF_API acsf_status acsf_config_set(acsf_config* config, const char* key, const char* value);
ACSF_API acsf_status acsf_config_json(const acsf_config* config, char** out_json);

/* -- exact automaton class -------------------------------------------- */

/* out_an: least states of an NFA accepting the word through a unique
 * accepting path; out_deficiency: floor(n/2)+1 - out_an */
ACSF_API acsf_status acsf_automatic_complexity(const acsf_word* word, const acsf_config* config,
                                               int* out_an, int* out_deficiency);

/* class is "exact", "single-run" or "multi-run"; writes h(0..n) into
 * out_values (capacity >= n+1) and the count into out_count */
ACSF_API acsf_status acsf_structure_function(const acsf_word* word, const char* klass,
                                             const acsf_config* config, int32_t* out_values,
                                             int32_t* out_count);

/* minimizing automaton behind h(m) of the chosen class, as JSON */
ACSF_API acsf_status acsf_witness_json(const acsf_word* word, const char* klass, int m,
                                       const acsf_config* config, char** out_json);

/* unique-path witness with acsf_automatic_complexity states, as JSON */
ACSF_API acsf_status acsf_an_witness_json(const acsf_word* word, const acsf_config* config,
                                          char** out_json);

/* the table G_n(m) for m = 0..m_max over alphabet size b, as JSON */
ACSF_API acsf_status acsf_g_table_json(int n, int m_max, int b, const acsf_config* config,
                                       char** out_json);

/* -- run statistics ---------------------------------------------------- */

/* exact Pr(longest success run <= x in n trials), p and result "num/den" */
ACSF_API acsf_status acsf_longest_run_cdf(int n, int x, const char* p_rational,
                                          char** out_rational);

/* probability of some adjacent equal pair: 1 - ((b-1)/b)^(n-1) */
ACSF_API acsf_status acsf_unary_adjacent_prob(int n, int b, char** out_rational);

/* mode: "binary-any", "binary-fixed" or "ary-minus-one" */
ACSF_API acsf_status acsf_restricted_alphabet_prob(int n, int a, const char* mode,
                                                   char** out_rational);

/* least n with the binary-any probability below alpha ("num/den") */
ACSF_API acsf_status acsf_min_threshold_n(int a, const char* alpha, int* out_n);

/* every candidate run event with exact p-values, the selected model and
 * the accept/reject verdict at threshold alpha, as JSON */
ACSF_API acsf_status acsf_best_model_json(const acsf_word* word, const char* alpha,
                                          char** out_json);

/* -- entropy bounds ----------------------------------------------------- */

ACSF_API acsf_status acsf_entropy(double p, double* out);
ACSF_API acsf_status acsf_entropy_inv(double y, double* out);
ACSF_API acsf_status acsf_u_bound(double a, int b, double* out);
ACSF_API acsf_status acsf_psi(double p, int b, double* out);

/* c_b, L_b, alpha_b and the two junction points of the piecewise bound */
ACSF_API acsf_status acsf_bound_constants(int b, double* out_c, double* out_l, double* out_alpha,
                                          double* out_a1, double* out_a2);

/* CSV table of (a, u(a)) and (p, psi(p)) samples on a grid */
ACSF_API acsf_status acsf_bounds_csv(int grid, int b, char** out_csv);

/* -- verification harness ----------------------------------------------- */

/* suite: "inequalities", "gn", "oracles" or "all"; out_violations counts
 * failed theorem checks (conjecture evidence never counts) */
ACSF_API acsf_status acsf_verify_json(const char* suite, int max_n, int max_k,
                                      const acsf_config* config, char** out_json,
                                      int* out_violations);

#ifdef __cplusplus
}
#endif

#endif /* ACSF_H */
