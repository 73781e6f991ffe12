/* cyclo: finite models of the cyclic and epicyclic categories, a bounded
 * checker for their geometric theories, and algorithms on ordered subgroups
 * of the rationals.
 *
 * C interface to the shared library. Every function returns a status code;
 * on failure cyclo_last_error() describes the problem (thread-local).
 * Strings returned through char** are heap-allocated; release them with
 * cyclo_string_free. Opaque handles have matching _free functions.
 * Structured results use the library's JSON schemas:
 *   model     {"n": int}
 *   arrow     {"src": int, "disp": int}
 *   loop      [arrow, ...]
 *   witness   {"blocks": [{"start","len","winding"}...], "rotation": int,
 *              "second_blocks": [...]?}
 *   morphism  {"src", "dst", "degree", "base", "blocks"}
 *   diagram   {"objects": int, "arrows": [{"from","to","label"}...]}
 *   verdict   {"label", "sequent", "verdict", "instances",
 *              "counterexample"?, "reverified"?}
 */

#ifndef CYCLO_H
#define CYCLO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyclo_status {
  CYCLO_OK = 0,
  CYCLO_ERR_INVALID_ARGUMENT,
  CYCLO_ERR_NON_COMPOSABLE,
  CYCLO_ERR_MODEL_MISMATCH,
  CYCLO_ERR_NOT_A_BIJECTION,
  CYCLO_ERR_NOT_TRANSITIVE,
  CYCLO_ERR_INDEX_OUT_OF_RANGE,
  CYCLO_ERR_PRECONDITION,
  CYCLO_ERR_NO_WITNESS,
  CYCLO_ERR_BASE_MISMATCH,
  CYCLO_ERR_SUM_MISMATCH,
  CYCLO_ERR_NONPOSITIVE_DEGREE,
  CYCLO_ERR_OVERFLOW,
  CYCLO_ERR_PARSE,
  CYCLO_ERR_UNKNOWN_NAME,
  CYCLO_ERR_SORT_MISMATCH,
  CYCLO_ERR_SIGNATURE_MISMATCH,
  CYCLO_ERR_NOT_A_MEMBER,
  CYCLO_ERR_NOT_POSITIVE,
  CYCLO_ERR_IMAGE_ESCAPES,
  CYCLO_ERR_INCONSISTENT_DIAGRAM,
  CYCLO_ERR_NO_JOINT_BOUND,
  CYCLO_ERR_IO,
  CYCLO_ERR_INTERNAL
} cyclo_status;

/* Arrow disp@src of the model X_n; the codomain is (src+disp) mod n. */
typedef struct cyclo_arrow {
  int64_t src;
  int64_t disp;
} cyclo_arrow;

typedef struct cyclo_bounds {
  int64_t arrow_disp;    /* |disp| window for universally quantified arrows */
  int64_t index_bound;   /* substituted for the symbolic bound B */
  int64_t witness_depth; /* |disp| window for existential search */
} cyclo_bounds;

/* classification flags */
#define CYCLO_ARROW_IDENTITY 0x01u
#define CYCLO_ARROW_POSITIVE 0x02u
#define CYCLO_ARROW_ENDO 0x04u
#define CYCLO_ARROW_NONTRIVIAL 0x08u
#define CYCLO_ARROW_CYCLE 0x10u

#define CYCLO_LOOP_IS_LOOP 0x01u
#define CYCLO_LOOP_POSITIVE 0x02u
#define CYCLO_LOOP_PHI 0x04u
#define CYCLO_LOOP_PSI 0x08u

typedef struct cyclo_morphism cyclo_morphism;
typedef struct cyclo_morphism_list cyclo_morphism_list;
typedef struct cyclo_sequent cyclo_sequent;
typedef struct cyclo_theory cyclo_theory;
typedef struct cyclo_structure cyclo_structure;
typedef struct cyclo_subgroup cyclo_subgroup;
typedef struct cyclo_diagram cyclo_diagram;

const char* cyclo_version(void);
const char* cyclo_last_error(void);
void cyclo_string_free(char* s);

/* -- the groupoids X_n ---------------------------------------------------- */

cyclo_status cyclo_arrow_parse(int64_t n, const char* text, cyclo_arrow* out);
cyclo_status cyclo_loop_parse(int64_t n, const char* text, cyclo_arrow* out, size_t cap,
                              size_t* len);
cyclo_status cyclo_compose(int64_t n, cyclo_arrow g, cyclo_arrow f, cyclo_arrow* out);
cyclo_status cyclo_inverse(int64_t n, cyclo_arrow f, cyclo_arrow* out);
cyclo_status cyclo_classify(int64_t n, cyclo_arrow f, uint32_t* flags);
cyclo_status cyclo_factorize(int64_t n, cyclo_arrow f, int64_t* base_path, int64_t* winding);
cyclo_status cyclo_pmin(int64_t n, int64_t from_obj, int64_t to_obj, cyclo_arrow* out);
cyclo_status cyclo_factor_through_cycle(int64_t n, cyclo_arrow f, cyclo_arrow* alpha,
                                        int64_t* winding);
/* {"orbits": [{"n": int, "walk": [int...]}...]} */
cyclo_status cyclo_from_permutation(const int64_t* image, size_t len, int require_transitive,
                                    char** json);

/* -- loops and generators -------------------------------------------------- */

cyclo_status cyclo_loop_classify(int64_t n, const cyclo_arrow* arrows, size_t len,
                                 uint32_t* flags, int64_t* total_disp);
cyclo_status cyclo_loop_composite(int64_t n, const cyclo_arrow* arrows, size_t len, int64_t i,
                                  cyclo_arrow* out);
/* witness JSON; y may be NULL for the binary form; cyclic_mode requires
 * elementary cycles */
cyclo_status cyclo_decompose(int64_t n, const cyclo_arrow* z, size_t zlen,
                             const cyclo_arrow* x, size_t xlen, const cyclo_arrow* y,
                             size_t ylen, int cyclic_mode, char** witness_json);
/* {"z": loop, "witness": witness} */
cyclo_status cyclo_minimal_generator(int64_t n, const cyclo_arrow* x, size_t xlen,
                                     const cyclo_arrow* y, size_t ylen, int cyclic_mode,
                                     char** json);
cyclo_status cyclo_insert_object(int64_t n, const cyclo_arrow* x, size_t len, int64_t obj,
                                 int64_t* index, cyclo_arrow* alpha, cyclo_arrow* beta);

/* -- morphisms of the epicyclic category ----------------------------------- */

cyclo_status cyclo_morphism_new(int64_t src_n, int64_t dst_m, int64_t degree, int64_t base,
                                const int64_t* blocks, size_t len, cyclo_morphism** out);
cyclo_status cyclo_morphism_from_json(const char* json, cyclo_morphism** out);
void cyclo_morphism_free(cyclo_morphism* h);
cyclo_status cyclo_morphism_to_json(const cyclo_morphism* h, char** json);
cyclo_status cyclo_morphism_apply(const cyclo_morphism* h, cyclo_arrow f, cyclo_arrow* out);
cyclo_status cyclo_morphism_compose(const cyclo_morphism* h2, const cyclo_morphism* h1,
                                    cyclo_morphism** out);
cyclo_status cyclo_morphism_mod(const cyclo_morphism* h, int64_t* degree);
cyclo_status cyclo_enumerate_homs(int64_t n, int64_t m, int64_t max_degree,
                                  cyclo_morphism_list** out);
void cyclo_morphism_list_free(cyclo_morphism_list* list);
size_t cyclo_morphism_list_size(const cyclo_morphism_list* list);
const cyclo_morphism* cyclo_morphism_list_get(const cyclo_morphism_list* list, size_t i);
cyclo_status cyclo_hom_count_lambda(int64_t n, int64_t m, int64_t* count);
/* {"pass": bool, "degree_one": int, "cyclic_functors": int, "mismatch": str} */
cyclo_status cyclo_check_inclusion(int64_t n, int64_t m, char** report_json);

/* -- geometric logic -------------------------------------------------------- */

cyclo_status cyclo_sequent_parse(const char* text, cyclo_sequent** out);
void cyclo_sequent_free(cyclo_sequent* s);
cyclo_status cyclo_sequent_print(const cyclo_sequent* s, char** text);
cyclo_status cyclo_expand_macro(const char* name, const int64_t* params, size_t nparams,
                                char** formula_text);
cyclo_status cyclo_theory_builtin(const char* name, int64_t scheme_cap, cyclo_theory** out);
cyclo_status cyclo_theory_from_file(const char* path, cyclo_theory** out);
void cyclo_theory_free(cyclo_theory* t);
size_t cyclo_theory_size(const cyclo_theory* t);
cyclo_status cyclo_theory_sequent(const cyclo_theory* t, size_t i, cyclo_sequent** out);
cyclo_status cyclo_theory_names(char** comma_separated);
/* 1 when the theory's sequents use the one-sorted group signature */
cyclo_status cyclo_theory_is_group(const cyclo_theory* t, int* is_group);
cyclo_status cyclo_structure_groupoid(int64_t n, cyclo_structure** out);
cyclo_status cyclo_structure_subgroup(const char* heights, const char* scale,
                                      cyclo_structure** out);
void cyclo_structure_free(cyclo_structure* st);
cyclo_status cyclo_check_sequent(const cyclo_structure* st, const cyclo_sequent* s,
                                 cyclo_bounds bounds, char** verdict_json);

/* -- ordered subgroups of Q ------------------------------------------------- */

/* heights "2:inf,3:1" (empty string allowed); scale "p/q" or NULL for 1 */
cyclo_status cyclo_subgroup_new(const char* heights, const char* scale, cyclo_subgroup** out);
void cyclo_subgroup_free(cyclo_subgroup* h);
cyclo_status cyclo_subgroup_contains(const cyclo_subgroup* h, const char* value, int* member);
cyclo_status cyclo_common_generator(const cyclo_subgroup* h, const char* x, const char* y,
                                    char** z, int64_t* n, int64_t* m);
cyclo_status cyclo_validate_hom(const cyclo_subgroup* src, const cyclo_subgroup* dst,
                                const char* ratio);
cyclo_status cyclo_archimedean_witness(const cyclo_subgroup* h, const char* x, const char* y,
                                       int64_t* least);
cyclo_status cyclo_sample_elements(const cyclo_subgroup* h, int64_t bound, char** json_array);
/* "chain:2,3" or the diagram JSON schema */
cyclo_status cyclo_diagram_parse(const char* text, cyclo_diagram** out);
void cyclo_diagram_free(cyclo_diagram* d);
/* {"cocone": ["1", "1/2", ...]} */
cyclo_status cyclo_colimit_cocone(const cyclo_diagram* d, char** json);

/* -- exports ----------------------------------------------------------------- */

cyclo_status cyclo_groupoid_json(int64_t n, char** json);
/* loops: ";"-separated comma lists of arrow literals to highlight, or NULL */
cyclo_status cyclo_export_groupoid_dot(int64_t n, const char* loops, char** dot);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CYCLO_H */
