/*
 * qcodes — exact construction and verification of quantum block codes from
 * polynomial evaluation codes, and of quantum synchronizable codes from
 * binary duadic codes.
 *
 * C API over the shared library. All objects are opaque handles created and
 * destroyed here; every function returns a qcodes_status (QCODES_OK on
 * success), and string outputs are heap-allocated, owned by the caller and
 * released with qcodes_string_free(). On failure, qcodes_last_error() gives
 * a thread-local human-readable message.
 */
#ifndef QCODES_H
#define QCODES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcodes_status {
    QCODES_OK = 0,
    QCODES_E_INVALID_MODULUS = 1,
    QCODES_E_INVALID_DEGREE = 2,
    QCODES_E_DIVISION_BY_ZERO = 3,
    QCODES_E_FIELD_MISMATCH = 4,
    QCODES_E_INVALID_SUBFIELD = 5,
    QCODES_E_ZERO_HAS_NO_ORDER = 6,
    QCODES_E_NOT_COPRIME = 7,
    QCODES_E_INVALID_CUTOFF = 8,
    QCODES_E_NOT_A_SQUARE = 9,
    QCODES_E_SHAPE = 10,
    QCODES_E_NOT_A_DIVISOR = 11,
    QCODES_E_REPEATED_ROOTS = 12,
    QCODES_E_EMPTY_CODE = 13,
    QCODES_E_EMPTY_SELECTION = 14,
    QCODES_E_UNSUPPORTED_ORDER = 15,
    QCODES_E_INVALID_REPRESENTATIVE = 16,
    QCODES_E_INVALID_INDEX = 17,
    QCODES_E_NEGATIVE_DIMENSION = 18,
    QCODES_E_NOT_DUAL_CONTAINING = 19,
    QCODES_E_INVALID_PROPAGATION = 20,
    QCODES_E_UNSUPPORTED = 21,
    QCODES_E_NOT_MINUS_ONE_MOD_8 = 22,
    QCODES_E_ZERO_CONSTANT_TERM = 23,
    QCODES_E_NOT_NESTED = 24,
    QCODES_E_INVALID_MULTIPLICITIES = 25,
    QCODES_E_NOT_COMPLEMENT_SPLITTING = 26,
    QCODES_E_INVALID_ARGUMENT = 27,
    QCODES_E_BUDGET_EXCEEDED = 28,
    QCODES_E_INTERNAL = 100, /* construction inconsistency: a library bug */
    QCODES_E_UNKNOWN = 127
} qcodes_status;

const char* qcodes_status_name(int status);
/* Thread-local message for the most recent failure on this thread. */
const char* qcodes_last_error(void);
void qcodes_string_free(char* s);

/* ---- evaluation-code contexts (q, m) ---------------------------------- */

typedef struct qcodes_ctx qcodes_ctx;
typedef struct qcodes_code qcodes_code;

int qcodes_ctx_new(uint64_t q, uint64_t m, qcodes_ctx** out);
void qcodes_ctx_free(qcodes_ctx* ctx);
/* Context summary: t, s, n, gamma, omega, evaluation exponents, ... */
int qcodes_ctx_info_json(const qcodes_ctx* ctx, char** out_json);
/* Cyclotomic coset dump; format "json" or "csv". */
int qcodes_cosets(uint64_t q, uint64_t m, const char* format, char** out);

/* Code C(S) for the cutoff selection; exported as matrix JSON + provenance. */
int qcodes_ctx_construct(const qcodes_ctx* ctx, uint64_t cutoff, qcodes_code** out);
void qcodes_code_free(qcodes_code* code);
int qcodes_code_dims(const qcodes_code* code, uint64_t* n, uint64_t* k);
int qcodes_code_export_json(const qcodes_code* code, char** out_json);
/* Exact distance within `budget` projective words, plus optional sampling
 * evidence (`samples` seeded draws; 0 to skip). */
int qcodes_code_mindist_json(const qcodes_code* code, uint64_t budget, uint64_t samples,
                             uint64_t seed, char** out_json);

/* Dual verification per the dual-set rule vs the matrix-level dual.
 * mode: "euclidean" or "hermitian". *out_pass is 1 on pass. */
int qcodes_ctx_dual_check(const qcodes_ctx* ctx, uint64_t cutoff, const char* mode,
                          char** out_json, int* out_pass);
/* All valid rows (cutoff ascending) with formula/matrix cross-checks.
 * format "json" or "csv". */
int qcodes_ctx_quantum_table(const qcodes_ctx* ctx, const char* format, char** out);

/* ---- parameter calculus ------------------------------------------------ */

/* rules: comma-separated subcode|lengthen|puncture|distance-drop. */
int qcodes_propagate(uint64_t base, uint64_t n, uint64_t k, uint64_t d, const char* rules,
                     char** out_json);

/* ---- duadic / synchronizable codes ------------------------------------- */

typedef struct qcodes_duadic qcodes_duadic;

int qcodes_duadic_new(uint64_t p, uint32_t n, qcodes_duadic** out);
void qcodes_duadic_free(qcodes_duadic* sys);
/* Splitting, irreducible factors (hex, LSB = constant term), generator
 * polynomials and their orders, factorization identity check. */
int qcodes_duadic_export_json(const qcodes_duadic* sys, char** out_json);
/* Synchronizable family for per-level multiplicities u, v (length n each);
 * al/ar pick a concrete misalignment pair (must satisfy al+ar < cap). */
int qcodes_duadic_sync_json(const qcodes_duadic* sys, const uint64_t* u, size_t u_len,
                            const uint64_t* v, size_t v_len, uint64_t al, uint64_t ar,
                            char** out_json);
/* Order of the level-m side-0/1 duadic generator, both computation routes. */
int qcodes_duadic_generator_order(const qcodes_duadic* sys, uint32_t level, int side,
                                  uint64_t* out_order);

/* ord(f) for a hex-encoded binary polynomial with f(0) = 1. If
 * known_multiple > 0, divisors of it are tested; otherwise x^k mod f is
 * iterated up to 2^20. */
int qcodes_poly_order_hex(const char* hex, uint64_t known_multiple, uint64_t* out_order);

/* ---- golden-table reproduction ----------------------------------------- */

/* table: "I", "III" or "IV"; format "json" or "csv". *out_mismatches counts
 * rows that failed to reproduce. */
int qcodes_reproduce(const char* table, const char* format, char** out,
                     uint32_t* out_mismatches);

#ifdef __cplusplus
}
#endif

#endif /* QCODES_H */
