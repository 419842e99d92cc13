#ifndef INCALG_H
#define INCALG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(INCALG_BUILDING)
#    define INCALG_API __declspec(dllexport)
#  else
#    define INCALG_API __declspec(dllimport)
#  endif
#else
#  define INCALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. They double as CLI exit codes. */
typedef enum incalg_status {
  INCALG_OK = 0,
  INCALG_FALSE = 1,          /* a check or verification came out negative */
  INCALG_E_INPUT = 2,        /* parse errors, bad arguments, not an involution, size limits */
  INCALG_E_HYPOTHESIS = 3,   /* Mult ⊆ Inn or Der = IDer fails */
  INCALG_E_CHAR2 = 4,        /* characteristic 2 */
  INCALG_E_INTERNAL = 5
} incalg_status;

typedef struct incalg_poset incalg_poset;
typedef struct incalg_field incalg_field;

/* Message and error kind of the last failure on this thread. */
INCALG_API const char* incalg_last_error(void);
INCALG_API const char* incalg_last_error_kind(void);

INCALG_API const char* incalg_version(void);

/* Strings returned through char** are owned by the caller. */
INCALG_API void incalg_free_string(char* s);

/* JSON or "a<b" line format. */
INCALG_API incalg_status incalg_poset_parse(const char* text, incalg_poset** out);
INCALG_API void incalg_poset_free(incalg_poset* p);
INCALG_API size_t incalg_poset_size(const incalg_poset* p);

/* "Q", "F5", "5", ... */
INCALG_API incalg_status incalg_field_parse(const char* spec, incalg_field** out);
INCALG_API void incalg_field_free(incalg_field* k);

INCALG_API incalg_status incalg_poset_info(const incalg_poset* p, char** json_out);

/* INCALG_OK when both hold, INCALG_E_HYPOTHESIS otherwise; the report is
   written either way. */
INCALG_API incalg_status incalg_hypotheses(const incalg_poset* p, const incalg_field* k, char** json_out);

/* lambda: JSON map or "x:y,..."; NULL classifies every involution of X. */
INCALG_API incalg_status incalg_classify(const incalg_poset* p, const incalg_field* k, const char* lambda,
                                         int general, char** json_out);

/* inv1, inv2: InvolutionSpec JSON or raw maps. *equivalent is set to 0/1. */
INCALG_API incalg_status incalg_equivalent(const incalg_poset* p, const incalg_field* k, const char* inv1,
                                           const char* inv2, int general, int* equivalent, char** json_out);

/* Re-checks a witness {"theta","alpha","k"} against two involutions:
   INCALG_OK if it conjugates inv1 into inv2, INCALG_FALSE otherwise. */
INCALG_API incalg_status incalg_check_witness(const incalg_poset* p, const incalg_field* k, const char* inv1,
                                              const char* inv2, const char* witness);

/* Runs the property checks; INCALG_FALSE if any fails. */
INCALG_API incalg_status incalg_verify(const incalg_poset* p, const incalg_field* k, unsigned long long seed,
                                       char** json_out);

#ifdef __cplusplus
}
#endif

#endif
