#ifndef GFKIT_H
#define GFKIT_H

/*
 * C interface to the constraint-system generating-function library.
 *
 * Objects are opaque handles created and destroyed here; every function
 * returns a status code, never throws, and leaves outputs untouched on
 * failure. Strings returned through char** are heap-allocated and must be
 * released with gfk_string_free(). After a failing call,
 * gfk_error_message() holds a human-readable diagnostic (thread-local).
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gfk_system gfk_system; /* parsed constraint-system document */
typedef struct gfk_form gfk_form;     /* rational product form */

typedef enum gfk_status {
  GFK_OK = 0,
  GFK_MISMATCH = 1, /* verification found a differing coefficient */
  GFK_USAGE,
  GFK_SYNTAX_ERROR,
  GFK_SEMANTIC_ERROR,
  GFK_COMPOSITION_CONDITION,
  GFK_DEGENERATE_FACTOR,
  GFK_NOT_IN_FAMILY,
  GFK_NOT_MULTIPLE,
  GFK_PARAMETER_VIOLATION,
  GFK_NONPOSITIVE_RATIO,
  GFK_PRECONDITION,
  GFK_INFEASIBLE_SEQUENCE,
  GFK_TOO_MANY,
  GFK_LENGTH_MISMATCH,
  GFK_UNSUPPORTED,
  GFK_INTERNAL /* unexpected failure; see gfk_error_message() */
} gfk_status;

/* Flags accepted by the operations below. */
#define GFK_F_JSON 1u     /* machine-readable output documents */
#define GFK_F_NO_GUARD 2u /* skip the ratio-chain first-constraint check */
#define GFK_F_TWO_VAR 4u  /* two-variable (odd/even weight) form */

/* ------------------------------------------------------------------ */
/* Systems: parse the line-oriented text format, render it back.      */

gfk_status gfk_system_parse(const char* text, gfk_system** out);
void gfk_system_free(gfk_system* sys);
gfk_status gfk_system_render(const gfk_system* sys, char** out);

/* Forms: parse/render "(1 + q^2) / [(1-q^1)(1-q^3)]"-style text.     */

gfk_status gfk_form_parse(const char* text, gfk_form** out);
void gfk_form_free(gfk_form* form);
gfk_status gfk_form_render(const gfk_form* form, char** out);

/* ------------------------------------------------------------------ */
/* Operations. trunc <= 0 selects the default bound of 25.            */

/* Closed form of the system (GFK_F_TWO_VAR, GFK_F_NO_GUARD). */
gfk_status gfk_system_form(const gfk_system* sys, unsigned flags, gfk_form** out);

/* Formatted closed-form output: form text, or with GFK_F_JSON the
 * {numerator, denominator, b, verified} document. */
gfk_status gfk_system_gf(const gfk_system* sys, unsigned flags, long trunc, char** out);

/* Check a closed form against brute-force enumeration. form may be NULL
 * (use the system's own closed form). Returns GFK_OK / GFK_MISMATCH and
 * fills *pass and the mismatch report. */
gfk_status gfk_system_verify(const gfk_system* sys, const gfk_form* form, unsigned flags,
                             long trunc, char** report, int* pass);

/* Series coefficients q^0..q^trunc of the closed form. */
gfk_status gfk_system_expand(const gfk_system* sys, unsigned flags, long trunc, char** out);

/* Factor exponents/multiplicities recovered from the enumeration series. */
gfk_status gfk_system_infer(const gfk_system* sys, unsigned flags, long trunc, char** out);

/* Weight-preserving bijection for matrix systems. csv is a comma-separated
 * integer vector; inverse_dir 0 maps a member to its image, 1 inverts. */
gfk_status gfk_system_theta(const gfk_system* sys, const char* csv, int inverse_dir,
                            unsigned flags, char** out);

/* Inverse problem: build and verify a matrix realizing the comma-separated
 * exponent sequence. Returns GFK_OK / GFK_MISMATCH like verify. */
gfk_status gfk_sequence_inverse(const char* seq_csv, unsigned flags, long trunc, char** out);

/* ------------------------------------------------------------------ */

const char* gfk_error_message(void); /* thread-local; empty if none */
const char* gfk_status_name(gfk_status s);
void gfk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GFKIT_H */
