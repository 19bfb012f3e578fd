/*
 * C interface to the inqmc library.
 *
 * All objects are opaque handles created by an inqmc_*_parse / _create style
 * function and released with the matching _free function. Every fallible
 * call returns an inqmc_status; on failure the thread-local message from
 * inqmc_last_error() describes the problem, and for parse errors
 * inqmc_last_error_offset() holds the byte offset of the offending token.
 *
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with inqmc_string_free.
 *
 * Handles are immutable after creation and may be shared between threads,
 * except where noted.
 */
#ifndef INQMC_INQMC_H
#define INQMC_INQMC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INQMC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define INQMC_API __attribute__((visibility("default")))
#else
#define INQMC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum inqmc_status {
    INQMC_OK = 0,
    INQMC_ERR_PARSE = 1,
    INQMC_ERR_VALIDATION = 2,
    INQMC_ERR_CODEC = 3,
    INQMC_ERR_QUERY = 4,
    INQMC_ERR_CLOSURE = 5,
    INQMC_ERR_REDUCTION = 6,
    INQMC_ERR_INVALID_ARGUMENT = 7,
    INQMC_ERR_INTERNAL = 8
} inqmc_status;

typedef struct inqmc_model inqmc_model;
typedef struct inqmc_formula inqmc_formula;
typedef struct inqmc_qbf inqmc_qbf;
typedef struct inqmc_instance inqmc_instance;

typedef struct inqmc_check_stats {
    uint64_t nodes_visited;
    uint64_t cache_hits;
} inqmc_check_stats;

typedef struct inqmc_size_report {
    size_t l;
    size_t matrix_size;
    size_t translated_size;
    double ratio;
    double bound_constant;
    int violation;
} inqmc_size_report;

typedef struct inqmc_verify_result {
    int qbf_value;         /* brute-force oracle */
    int model_check_value; /* support of the reduced instance */
    int agree;
    inqmc_check_stats stats;
} inqmc_verify_result;

INQMC_API const char* inqmc_version(void);
INQMC_API const char* inqmc_last_error(void);
INQMC_API size_t inqmc_last_error_offset(void);
INQMC_API const char* inqmc_status_name(inqmc_status status);
INQMC_API void inqmc_string_free(char* s);

/* Models */
INQMC_API inqmc_status inqmc_model_parse(const char* text, inqmc_model** out);
INQMC_API inqmc_status inqmc_model_decode(const char* delta, const char* const* epsilons, size_t epsilon_count,
                                          size_t worlds, size_t atoms, inqmc_model** out);
INQMC_API inqmc_status inqmc_model_random(uint64_t seed, size_t worlds, size_t atoms, size_t max_generators,
                                          inqmc_model** out);
INQMC_API inqmc_status inqmc_model_render(const inqmc_model* model, char** out);
/* delta is written to *delta; epsilon i can be fetched with inqmc_model_epsilon. */
INQMC_API inqmc_status inqmc_model_delta(const inqmc_model* model, char** delta);
INQMC_API inqmc_status inqmc_model_epsilon(const inqmc_model* model, size_t world, char** epsilon);
INQMC_API size_t inqmc_model_worlds(const inqmc_model* model);
INQMC_API size_t inqmc_model_atoms(const inqmc_model* model);
INQMC_API int inqmc_model_is_modal(const inqmc_model* model);
INQMC_API void inqmc_model_free(inqmc_model* model);

/* Formulas */
INQMC_API inqmc_status inqmc_formula_parse(const char* text, inqmc_formula** out);
INQMC_API inqmc_status inqmc_formula_render(const inqmc_formula* formula, char** out);
INQMC_API size_t inqmc_formula_size(const inqmc_formula* formula);
INQMC_API int inqmc_formula_equal(const inqmc_formula* a, const inqmc_formula* b);
INQMC_API void inqmc_formula_free(inqmc_formula* formula);

/* Model checking. `state` is a bitstring with one character per world.
 * use_memo selects the memoized evaluator; both give the same answer.
 * stats may be NULL. */
INQMC_API inqmc_status inqmc_check(const inqmc_model* model, const char* state, const inqmc_formula* formula,
                                   int use_memo, int* supported, inqmc_check_stats* stats);

/* QBFs */
INQMC_API inqmc_status inqmc_qbf_parse(const char* text, int rename_variables, inqmc_qbf** out);
INQMC_API inqmc_status inqmc_qbf_random(uint64_t seed, size_t vars, size_t matrix_nodes, inqmc_qbf** out);
INQMC_API inqmc_status inqmc_qbf_render(const inqmc_qbf* qbf, char** out);
INQMC_API size_t inqmc_qbf_vars(const inqmc_qbf* qbf);
INQMC_API inqmc_status inqmc_qbf_eval(const inqmc_qbf* qbf, int* value);
INQMC_API void inqmc_qbf_free(inqmc_qbf* qbf);

/* Reduction to model checking over switching models */
INQMC_API inqmc_status inqmc_reduce(const inqmc_qbf* qbf, inqmc_instance** out);
INQMC_API inqmc_status inqmc_instance_model(const inqmc_instance* instance, inqmc_model** out);
INQMC_API inqmc_status inqmc_instance_state(const inqmc_instance* instance, char** out);
INQMC_API inqmc_status inqmc_instance_formula(const inqmc_instance* instance, inqmc_formula** out);
/* bound_constant <= 0 selects the library default. */
INQMC_API inqmc_status inqmc_instance_size_report(const inqmc_instance* instance, double bound_constant,
                                                  inqmc_size_report* out);
INQMC_API void inqmc_instance_free(inqmc_instance* instance);

/* Runs the brute-force oracle and the reduce-then-check pipeline. */
INQMC_API inqmc_status inqmc_verify(const inqmc_qbf* qbf, inqmc_verify_result* out);

#ifdef __cplusplus
}
#endif

#endif /* INQMC_INQMC_H */
