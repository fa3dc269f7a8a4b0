#ifndef BRAIDSPIN_H
#define BRAIDSPIN_H

#ifdef __cplusplus
extern "C" {
#endif

/* return codes */
#define BS_OK 0
#define BS_FAIL 1
#define BS_USAGE 2
#define BS_INTERNAL 3

typedef struct bs_context bs_context;

bs_context *bs_context_new(void);
void bs_context_free(bs_context *ctx);

/* keys: mu, smax, mode (exact|float), samples (comma separated rationals), seed,
   format (json|table|csv), threads */
int bs_set_option(bs_context *ctx, const char *key, const char *value);
/* canonical string form of an option after parsing; NULL for unknown keys */
const char *bs_get_option(const bs_context *ctx, const char *key);

/* suite: braids, metric, exterior, clifford, hodge, haar, dirac, lichnerowicz, all.
   BS_OK when every predicate passes, BS_FAIL otherwise. */
int bs_verify(bs_context *ctx, const char *suite, char **report);
int bs_spectrum(bs_context *ctx, char **out);
int bs_asymptotics(bs_context *ctx, char **out);
int bs_hodge_table(bs_context *ctx, char **out);
int bs_algebra_nf(bs_context *ctx, const char *word, char **out);
int bs_haar(bs_context *ctx, int degree, char **out);

void bs_string_free(char *s);
/* message of the last failing call on this context, "" if none */
const char *bs_last_error(const bs_context *ctx);

#ifdef __cplusplus
}
#endif

#endif
