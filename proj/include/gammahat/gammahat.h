/* C interface to the gammahat library: opaque handles plus status codes.
 *
 * Every function returning gh_status leaves a human-readable message for
 * the calling thread in gh_last_error() when it fails. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * gh_string_free().
 */
#ifndef GAMMAHAT_H
#define GAMMAHAT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GH_API __declspec(dllexport)
#else
#define GH_API __attribute__((visibility("default")))
#endif

typedef enum {
  GH_OK = 0,
  GH_ERR_INVALID_ARGUMENT = 1,
  GH_ERR_PARSE = 2,
  GH_ERR_GUARD = 3,
  GH_ERR_DIMENSION = 4,
  GH_ERR_PRECONDITION = 5,
  GH_ERR_PRECISION = 6,
  GH_ERR_NOT_REPRESENTABLE = 7,
  GH_ERR_INTERNAL = 99
} gh_status;

typedef enum { GH_FORMAT_PLAIN = 0, GH_FORMAT_LATEX = 1, GH_FORMAT_JSON = 2 } gh_format;

typedef struct gh_sequence gh_sequence;
typedef struct gh_manifold gh_manifold;
typedef struct gh_value gh_value;

GH_API const char* gh_last_error(void);
GH_API void gh_string_free(char* s);
GH_API const char* gh_version(void);

/* Multiplicative sequences. genus: gamma-hat, gamma, a-hat, todd, l. */
GH_API gh_status gh_sequence_create(const char* genus, int n_max, gh_sequence** out);
/* Gamma-hat sequence computed through the Hoffman homomorphism. */
GH_API gh_status gh_sequence_create_hoffman(int n_max, gh_sequence** out);
GH_API gh_status gh_sequence_from_json(const char* json, gh_sequence** out);
GH_API gh_status gh_sequence_render(const gh_sequence* seq, gh_format format, int reduced, char** out);
/* 1 if the two sequences agree coefficient for coefficient. */
GH_API int gh_sequence_equal(const gh_sequence* a, const gh_sequence* b);
GH_API gh_status gh_sequence_pontryagin(const gh_sequence* seq, int degree, gh_format format, char** out);
GH_API void gh_sequence_free(gh_sequence* seq);

/* Manifolds: cpn:<n> | k3 | s2 | point | lebrun:<n> | product(<a>,<b>) | file:<path>. */
GH_API gh_status gh_manifold_parse(const char* spec, gh_manifold** out);
GH_API gh_status gh_manifold_from_json(const char* json, gh_manifold** out);
GH_API gh_status gh_manifold_to_json(const gh_manifold* m, char** out);
GH_API int gh_manifold_dimension(const gh_manifold* m);
GH_API void gh_manifold_free(gh_manifold* m);

/* Values in Q[gamma, zeta(2), zeta(3), ...]. */
GH_API gh_status gh_genus_evaluate(const gh_sequence* seq, const gh_manifold* m, gh_value** out);
/* map: "Z" or "Zhat"; partition: "3,1,1". Image of m_lambda. */
GH_API gh_status gh_hoffman(const char* partition, const char* map, gh_value** out);
GH_API gh_status gh_value_from_json(const char* json, gh_value** out);
GH_API gh_status gh_value_render(const gh_value* v, gh_format format, int reduced, char** out);
/* Decimal value with `decimals` digits after the point, at `digits` precision. */
GH_API gh_status gh_value_numeric(const gh_value* v, int digits, int decimals, char** out);
/* 1 if equal after even-zeta reduction. */
GH_API int gh_value_equal(const gh_value* a, const gh_value* b);
GH_API void gh_value_free(gh_value* v);

/* Regularized product of {scale * n}, raised to `power`. */
GH_API gh_status gh_regprod(const char* scale, int power, gh_format format, char** out);
/* Partial product prod_{n<=k} (1+z/n) e^(-z/n). With numeric != 0, also the
 * distance of each coefficient to the 1/Gamma-hat limit. */
GH_API gh_status gh_psireg(long k, int order, int numeric, int digits, gh_format format, char** out);
/* Regularized equivariant Euler class, graded by degree. */
GH_API gh_status gh_reg_euler(int rank, int n_max, int real, gh_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GAMMAHAT_H */
