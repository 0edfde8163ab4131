/*
 * quintessa: exact arithmetic for pure quintic fields Q(n^(1/5)), the
 * cyclotomic field Q(zeta5), and their compositum.
 *
 * C surface over the C++ core. All functions return qsa_status; results
 * come back through out parameters. Objects are opaque handles freed by
 * the matching *_free; strings returned through char** are heap copies
 * freed by qsa_string_free. On any error the thread-local message from
 * qsa_last_error() describes what went wrong.
 *
 * Cyclotomic integers are written "c0,c1,c2,c3" (coordinates on the basis
 * 1, zeta, zeta^2, zeta^3); a bare integer is shorthand for "c,0,0,0".
 * Radicands and other big integers pass as decimal strings.
 */

#ifndef QUINTESSA_H
#define QUINTESSA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsa_status {
    QSA_OK = 0,
    QSA_EINVAL = 1,           /* invalid argument */
    QSA_EDIVZERO = 2,         /* division by zero */
    QSA_EDEGENERATE = 3,      /* radicand reduces to a trivial extension */
    QSA_ENOTCOPRIME = 4,      /* symbol base shares a factor with the prime */
    QSA_EUNSUPPORTED = 5,     /* outside the implemented theory */
    QSA_EPARSE = 6,           /* unparseable input */
    QSA_EIO = 7,              /* file system trouble */
    QSA_EORACLE_PROTOCOL = 8, /* oracle spoke off protocol */
    QSA_EINTERNAL = 9
} qsa_status;

/* message for the most recent failure on this thread; never NULL */
const char* qsa_last_error(void);

const char* qsa_version(void);

void qsa_string_free(char* s);

/* ---- integers of Z[zeta5] ---- */

typedef struct qsa_cycint qsa_cycint;

qsa_status qsa_cycint_parse(const char* text, qsa_cycint** out);
qsa_status qsa_cycint_from_coords(long long c0, long long c1, long long c2,
                                  long long c3, qsa_cycint** out);
void qsa_cycint_free(qsa_cycint* x);

qsa_status qsa_cycint_str(const qsa_cycint* x, char** out);
qsa_status qsa_cycint_add(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out);
qsa_status qsa_cycint_sub(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out);
qsa_status qsa_cycint_mul(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out);
/* the automorphism zeta -> zeta^i, i in 1..4 */
qsa_status qsa_cycint_galois(const qsa_cycint* x, int i, qsa_cycint** out);
/* absolute norm, a nonnegative decimal string */
qsa_status qsa_cycint_norm(const qsa_cycint* x, char** out);
qsa_status qsa_cycint_gcd(const qsa_cycint* a, const qsa_cycint* b, qsa_cycint** out);

/* ---- primes of Z[zeta5] ---- */

typedef struct qsa_prime qsa_prime;
typedef struct qsa_prime_list qsa_prime_list;

/* distinct primes over the rational prime p (lambda for p = 5) */
qsa_status qsa_primes_over(unsigned long long p, qsa_prime_list** out);
void qsa_prime_list_free(qsa_prime_list* list);
size_t qsa_prime_list_len(const qsa_prime_list* list);
qsa_status qsa_prime_list_get(const qsa_prime_list* list, size_t i, qsa_prime** out);

/* rebuild a prime from a generator (norm must be p^f for one prime p) */
qsa_status qsa_prime_from_generator(const qsa_cycint* gen, qsa_prime** out);
void qsa_prime_free(qsa_prime* prime);
qsa_status qsa_prime_generator(const qsa_prime* prime, qsa_cycint** out);
/* residue degree f and the rational prime below */
int qsa_prime_f(const qsa_prime* prime);
unsigned long long qsa_prime_below(const qsa_prime* prime);
/* multiplicity of the prime in x (x nonzero) */
qsa_status qsa_prime_valuation(const qsa_prime* prime, const qsa_cycint* x, int* out);

/* ---- quintic residue symbols ---- */

/* exponent j in 0..4 with alpha^((N-1)/5) = zeta^j mod the prime */
qsa_status qsa_symbol(const qsa_cycint* alpha, const qsa_prime* prime, int* out_j);

/* norm residue exponent at an unramified place of k0(alpha^(1/5))/k0 */
qsa_status qsa_norm_residue(const qsa_cycint* beta, const qsa_cycint* alpha,
                            const qsa_prime* prime, int* out_j);

/* symbol identities at the conjugate prime pair over p = -1 (mod 5):
 * j1, j2 are the exponents of c at the two primes, j12 and j21 the
 * exponents of each prime at the other */
qsa_status qsa_conjugate_symbol_identities(unsigned long long p, const char* c,
                                           int* out_j1, int* out_j2, int* out_j12,
                                           int* out_j21, int* out_doubling_holds,
                                           int* out_cross_trivial);

/* behaviour of a prime in the Kummer extension k0(theta^(1/5))/k0 */
typedef enum qsa_split_type {
    QSA_SPLIT = 0,
    QSA_INERT = 1,
    QSA_RAMIFIED = 2
} qsa_split_type;

qsa_status qsa_kummer_split_type(const qsa_cycint* theta, const qsa_prime* prime,
                                 qsa_split_type* out);

/* ---- reports (classification, splitting, symbols, kind, verification) ---- */

typedef struct qsa_report qsa_report;

void qsa_report_free(qsa_report* report);
/* render the report; both come from the same data */
qsa_status qsa_report_json(const qsa_report* report, char** out);
qsa_status qsa_report_text(const qsa_report* report, char** out);

/* strip 5th powers from a radicand; errors if nothing is left */
qsa_status qsa_normalize_radicand(const char* n, char** out);

/* kind of Q(n^(1/5)) (first/second) with radical and conductor data */
qsa_status qsa_field_kind(const char* n, qsa_report** out);

/* splitting pattern of p in the degree-5 field ("gamma"), Q(zeta5) ("k0"),
 * or the normal closure ("k"); n is required for gamma and k */
qsa_status qsa_split(const char* field, unsigned long long p, const char* n,
                     qsa_report** out);

/* symbols of alpha at every prime over p (p != 5) */
qsa_status qsa_symbol_report(const char* alpha, unsigned long long p, qsa_report** out);

/* classify a radicand into the covered shapes (or uncovered, with reason) */
qsa_status qsa_classify(const char* n, qsa_report** out);
/* attach the case's symbol hypotheses; l = 0 means "no auxiliary prime",
 * allowed only for the prime-power shape */
qsa_status qsa_classify_hypothesis_check(qsa_report* report, unsigned long long l);
/* attach candidate auxiliary primes with their symbol data */
qsa_status qsa_classify_suggest_l(qsa_report* report, int count);

/* predicted 5-valuation of the closure class number from the unit index
 * u = [E:E0] and the class number of the degree-5 field */
qsa_status qsa_predicted_structure(const char* u, const char* h_gamma, int* out_v5_u,
                                   int* out_v5_h_gamma, int* out_v5_h_k,
                                   int* out_type_55, int* out_consistent);

/* load fixture CSVs and verify every row; oracle_cmd may be NULL (oracle
 * checks then SKIP). out_fail_rows counts rows with structural failures. */
qsa_status qsa_verify_tables(const char* const* paths, size_t n_paths,
                             const char* oracle_cmd, qsa_report** out,
                             int* out_fail_rows);

#ifdef __cplusplus
}
#endif

#endif /* QUINTESSA_H */
