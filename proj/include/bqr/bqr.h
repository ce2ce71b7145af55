#ifndef BQR_H
#define BQR_H

/* C interface to libbqr.
 *
 * Handles are opaque and owned by the caller. Every function returning int
 * uses the status codes below; on a status >= BQR_EINVAL the message is
 * available from bqr_last_error() on the same thread. Strings handed out
 * through char** parameters are freed with bqr_string_free. Reports are
 * produced even when a check fails (status BQR_FALSE). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define BQR_API __attribute__((visibility("default")))
#else
#define BQR_API
#endif

enum {
    BQR_OK = 0,
    BQR_FALSE = 1,     /* a mathematical check came out false */
    BQR_EINVAL = 2,    /* bad argument, unknown name, parse error */
    BQR_EBUDGET = 3,   /* rewrite budget or nesting cap exhausted */
    BQR_EINTERNAL = 4
};

/* flags */
#define BQR_JSON 1u
#define BQR_RELATION_BASIS 2u
#define BQR_REVERSAL 4u   /* auto-group: also search anti-automorphisms */

typedef struct bqr_type bqr_type;
typedef struct bqr_morphism bqr_morphism;

typedef struct {
    size_t nesting_cap; /* 0 = default */
    size_t steps;       /* 0 = default */
} bqr_budget;

BQR_API const char* bqr_version(void);
BQR_API const char* bqr_last_error(void);
BQR_API void bqr_string_free(char* s);

BQR_API int bqr_catalog_list(unsigned flags, char** out);

/* A catalog name, or a path to a .bqr (DSL) or JSON file. */
BQR_API int bqr_type_load(const char* name_or_path, bqr_type** out);
/* DSL text, or JSON when the first non-blank character is '{'. */
BQR_API int bqr_type_parse(const char* text, bqr_type** out);
BQR_API void bqr_type_free(bqr_type* t);
BQR_API int bqr_type_name(const bqr_type* t, char** out);
BQR_API int bqr_type_dim(const bqr_type* t, size_t* out);
BQR_API int bqr_type_relation_count(const bqr_type* t, size_t* out);

BQR_API int bqr_type_show(const bqr_type* t, unsigned flags, char** out);
/* BQR_FALSE when the presentation is invalid. */
BQR_API int bqr_type_validate(const bqr_type* t, unsigned flags, char** out);
/* format: "dsl", "json" or "latex" */
BQR_API int bqr_type_export(const bqr_type* t, const char* format, char** out);

BQR_API int bqr_square(const bqr_type* a, const bqr_type* b, bqr_type** out);
BQR_API int bqr_maltese(const bqr_type* a, const bqr_type* b, bqr_type** out);
BQR_API int bqr_power(const bqr_type* t, int n, bqr_type** out);
BQR_API int bqr_dual(const bqr_type* t, bqr_type** out);

BQR_API int bqr_double_dual(const bqr_type* t, unsigned flags, char** out);
BQR_API int bqr_arity3(const bqr_type* t, unsigned flags, char** out);
BQR_API int bqr_auto_group(const bqr_type* t, unsigned flags, char** out);
BQR_API int bqr_tensor_model(const bqr_type* a, const bqr_type* b, unsigned flags, char** out);

/* {"source": name, "target": name, "matrix": [["p/q", ...], ...]} with one
 * row per target generator. */
BQR_API int bqr_morphism_parse(const char* json, const bqr_type* source, const bqr_type* target,
                               bqr_morphism** out);
BQR_API void bqr_morphism_free(bqr_morphism* f);
/* BQR_FALSE when f is not a morphism. */
BQR_API int bqr_morphism_check(const bqr_morphism* f, unsigned flags, char** out);

/* law: rb, rb0, nijenhuis, leftrb, rightrb; weight: "formal" or "p/q". */
BQR_API int bqr_verify_operator(const bqr_type* t, const char* law, const char* weight, const bqr_budget* budget,
                                unsigned flags, char** out);
/* laws: comma separated, at most three */
BQR_API int bqr_verify_family(const bqr_type* t, const char* laws, const char* weight, const bqr_budget* budget,
                              unsigned flags, char** out);
BQR_API int bqr_verify_lemmas(const bqr_budget* budget, unsigned flags, char** out);
BQR_API int bqr_non_duality(unsigned flags, char** out);
/* BQR_FALSE when any check fails; the report names it. */
BQR_API int bqr_paper_suite(unsigned flags, char** out);

#ifdef __cplusplus
}
#endif

#endif
