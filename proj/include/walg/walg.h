#ifndef WALG_H
#define WALG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WALG_API __declspec(dllexport)
#else
#define WALG_API __attribute__((visibility("default")))
#endif

typedef enum {
  WALG_OK = 0,
  WALG_VERIFY_FAILED = 1,
  WALG_INPUT_ERROR = 2,
  WALG_SOLVE_ERROR = 3,  /* k- or c-dependent pivot, unreduced representative */
  WALG_INTERNAL_ERROR = 4
} walg_status;

typedef enum { WALG_TEXT = 0, WALG_STRUCTURED = 1 } walg_format;
typedef enum { WALG_CLOSED = 0, WALG_DIRECT = 1, WALG_BOTH = 2 } walg_method;

typedef struct walg_algebra walg_algebra;
typedef struct walg_w walg_w;
typedef struct walg_brst walg_brst;

/* Output options.  k and max_weight are rational strings; NULL keeps k symbolic / no cutoff. */
typedef struct {
  walg_format format;
  walg_method method;
  const char* k;
  const char* max_weight;
} walg_options;

WALG_API void walg_options_init(walg_options* o);

/* Message for the last non-OK status on this thread. */
WALG_API const char* walg_last_error(void);
/* Every char** result is heap allocated and released with walg_string_free. */
WALG_API void walg_string_free(char* s);

WALG_API int walg_catalog(walg_format format, char** out);

/* Catalog name or path to an algebra document. */
WALG_API int walg_algebra_load(const char* name_or_path, walg_algebra** out);
WALG_API void walg_algebra_free(walg_algebra* a);
WALG_API int walg_algebra_describe(const walg_algebra* a, walg_format format, char** out);

/* Classical (susy = 0) or SUSY (susy = 1) W-algebra generators. */
WALG_API int walg_w_build(const walg_algebra* a, int susy, walg_w** out);
WALG_API void walg_w_free(walg_w* w);
WALG_API int walg_w_count(const walg_w* w, int* n);
WALG_API int walg_w_generators(const walg_w* w, const walg_options* o, char** out);
/* WALG_BOTH reports WALG_VERIFY_FAILED when closed and direct disagree. */
WALG_API int walg_w_bracket(const walg_w* w, int i, int j, const walg_options* o, char** out);
WALG_API int walg_w_table(const walg_w* w, const walg_options* o, char** out);

/* BRST complex of an algebra with an osp(1|2) quintuple. */
WALG_API int walg_brst_build(const walg_algebra* a, walg_brst** out);
WALG_API void walg_brst_free(walg_brst* b);
/* {d_χ d} = 0 with symbolic c and d_[0]² = 0 on generators. */
WALG_API int walg_brst_check(const walg_brst* b, walg_format format, char** out);
/* cohomology generators at c = i */
WALG_API int walg_brst_generators(const walg_brst* b, const walg_options* o, char** out);
WALG_API int walg_brst_table(const walg_brst* b, const walg_options* o, char** out);

/* NULL-terminated list of suite names, static storage. */
WALG_API const char* const* walg_suites(void);
/* suite "all" runs every suite that applies to the algebra. */
WALG_API int walg_verify(const walg_algebra* a, const char* suite, unsigned seed, walg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
