#ifndef JTYPE_JTYPE_H
#define JTYPE_JTYPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(JT_BUILDING_LIBRARY)
#define JT_API __attribute__((visibility("default")))
#else
#define JT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jt_status {
  JT_OK = 0,
  JT_INVALID_ARGUMENT = 1,
  JT_PARSE_ERROR = 2,
  JT_DIVISION_BY_ZERO = 3,
  JT_FIELD_MISMATCH = 4,
  JT_VARIABLE_MISMATCH = 5,
  JT_INHOMOGENEOUS = 6,
  JT_CHARACTERISTIC = 7,
  JT_NOT_ARTINIAN = 8,
  JT_ZERO_FORM = 9,
  JT_OUT_OF_RANGE = 10,
  JT_INCOMPARABLE = 11,
  JT_INTERNAL = 12
} jt_status;

typedef struct jt_model jt_model;
typedef struct jt_form jt_form;

typedef enum jt_verify_mode { JT_VERIFY_SAMPLE = 0, JT_VERIFY_ENUMERATE = 1 } jt_verify_mode;

typedef struct jt_verify_options {
  size_t samples; /* per sampling stream */
  uint64_t seed;
  jt_verify_mode mode;
  unsigned threads; /* 0: hardware concurrency */
  int keep_samples;
} jt_verify_options;

JT_API const char* jt_version(void);
JT_API const char* jt_status_name(jt_status status);
/* Message of the last failure on the calling thread. */
JT_API const char* jt_last_error(void);
JT_API void jt_string_free(char* s);

/* Validates a field spelling without building anything. */
JT_API jt_status jt_field_check(const char* field);
/* Fields are spelled "q" or "gfp:P"; NULL selects GF(32003). */
JT_API jt_status jt_model_perazzo(const char* params, const char* field, jt_model** out);
/* vars: comma-separated names; polynomial over the dual (uppercase) variables. */
JT_API jt_status jt_model_dual(const char* vars, const char* polynomial, const char* field, jt_model** out);
/* generators separated by ';'. */
JT_API jt_status jt_model_ideal(const char* vars, const char* generators, int bound, const char* field, jt_model** out);
JT_API void jt_model_free(jt_model* model);

JT_API int jt_model_socle_degree(const jt_model* model);
JT_API size_t jt_model_dimension(const jt_model* model);
JT_API int jt_model_is_perazzo(const jt_model* model);
/* Writes min(count, capacity) values; *count receives the full length. */
JT_API jt_status jt_model_hilbert(const jt_model* model, size_t* values, size_t capacity, size_t* count);

JT_API jt_status jt_form_parse(const jt_model* model, const char* text, jt_form** out);
JT_API void jt_form_free(jt_form* form);

JT_API jt_status jt_jordan_type(const jt_model* model, const jt_form* form, size_t* parts, size_t capacity,
                                size_t* count);
JT_API jt_status jt_jordan_degree_type(const jt_model* model, const jt_form* form, size_t* lengths, int* degrees,
                                       size_t capacity, size_t* count);
JT_API jt_status jt_lefschetz(const jt_model* model, const jt_form* form, int* weak, int* strong);

/* JSON payloads; free the result with jt_string_free. */
JT_API jt_status jt_hf_json(const jt_model* model, char** out);
JT_API jt_status jt_jordan_json(const jt_model* model, const jt_form* form, char** out);
JT_API jt_status jt_ann_json(const jt_model* model, int degree, char** out);
JT_API jt_status jt_classify_json(const jt_model* model, const jt_form* form, char** out);
JT_API jt_status jt_predict_json(const jt_model* model, const jt_form* form, char** out);
/* partition may be NULL; otherwise its chain position is included. */
JT_API jt_status jt_chain_json(const char* params, const char* partition, char** out);
/* order: -1 p < q, 0 equal, 1 p > q, 2 incomparable. */
JT_API jt_status jt_dominance(const char* p, const char* q, int* order);
/* *passed is 1 when every literal sample matches and all checks hold. */
JT_API jt_status jt_verify_json(const char* params, const char* field, const jt_verify_options* options, char** out,
                                int* passed);

#ifdef __cplusplus
}
#endif

#endif
