#ifndef FLAGCALC_H
#define FLAGCALC_H

/*
 * C interface to the flagcalc library.
 *
 * Handles are opaque. Every call returns an fc_status; on failure the
 * message is available from fc_last_error() (thread-local, valid until the
 * next call on the same thread). Strings returned through char** are owned
 * by the caller and released with fc_string_free. Structured results are
 * JSON documents.
 */

#include <stddef.h>

#if defined(_WIN32)
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fc_status {
  FC_OK = 0,
  FC_ERR_INVALID = 1,      /* precondition violated */
  FC_ERR_PARSE = 2,        /* malformed input string */
  FC_ERR_NOT_COVERED = 3,  /* well formed, outside what the library knows */
  FC_ERR_UNSUPPORTED = 4,  /* certificate routine cannot decide this shape */
  FC_ERR_INTERNAL = 5
} fc_status;

typedef struct fc_catalog fc_catalog;
typedef struct fc_ring fc_ring;

FC_API const char* fc_version(void);
FC_API const char* fc_status_name(fc_status s);
FC_API const char* fc_last_error(void);
FC_API void fc_string_free(char* s);

/* Catalog of VMRT data. The builtin catalog is compiled in. */
FC_API fc_status fc_catalog_builtin(fc_catalog** out);
FC_API fc_status fc_catalog_load(const char* path, fc_catalog** out);
FC_API void fc_catalog_free(fc_catalog* c);

/* Varieties are written <FAMILY><rank>/P<i1>,<i2>,... or <FAMILY><rank>/Pminus<k>. */
FC_API fc_status fc_dimension(const char* variety, int* out);
/* Dimension and roots for any variety; VMRT, a and e.d. when covered (else null). */
FC_API fc_status fc_info(const fc_catalog* c, const char* variety, char** json_out);
FC_API fc_status fc_table_verify(const fc_catalog* c, int samples, char** json_out, int* passed);

/* Proof replays: "gd-og510" or "ed-f4p4". ring_text may be NULL for the
 * standard presentation, or a ring in export format to replay on. */
FC_API fc_status fc_prove(const char* name, const char* ring_text, char** json_out, int* passed);

FC_API fc_status fc_split(const fc_catalog* c, const char* variety, const char* type_csv, char** json_out);
FC_API fc_status fc_morphism(const char* source, const char* target, char** json_out);
FC_API fc_status fc_witness(const fc_catalog* c, const char* variety, char** json_out);

/* shape: "rank-1", "quadric-4" or "isotropic-2-plane". */
FC_API fc_status fc_obstruction(const char* source, const char* shape, char** json_out);

/* Rings: builtin names OG510, SG26, OG27, Q4, BC<n>, P<m>, Gr<k>_<n>;
 * or text in export format via fc_ring_parse. */
FC_API fc_status fc_ring_builtin(const char* name, fc_ring** out);
FC_API fc_status fc_ring_parse(const char* text, fc_ring** out);
FC_API void fc_ring_free(fc_ring* r);
FC_API fc_status fc_ring_summary(const fc_ring* r, char** json_out);
FC_API fc_status fc_ring_degree(const fc_ring* r, int degree, char** json_out);
FC_API fc_status fc_ring_normal_form(const fc_ring* r, const char* poly, char** out);
FC_API fc_status fc_ring_contains(const fc_ring* r, const char* poly, int* out);
FC_API fc_status fc_ring_export(const fc_ring* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
