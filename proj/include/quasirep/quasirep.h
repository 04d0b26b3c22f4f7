// Copyright 2026 The quasirep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUASIREP_QUASIREP_H
#define QUASIREP_QUASIREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(QUASIREP_BUILDING_LIBRARY)
#define QR_API __attribute__((visibility("default")))
#else
#define QR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. */
typedef struct qr_group qr_group;
typedef struct qr_irreps qr_irreps;

typedef enum qr_status {
  QR_OK = 0,
  QR_ERR_NOT_A_GROUP = 1,
  QR_ERR_CLOSURE_CAP = 2,
  QR_ERR_UNSUPPORTED_PARAMETER = 3,
  QR_ERR_ORDER_CAP = 4,
  QR_ERR_DECOMPOSITION_FAILED = 5,
  QR_ERR_TOLERANCE_VIOLATION = 6,
  QR_ERR_INCOMPLETE_TABLE = 7,
  QR_ERR_MISSING_IRREP_TABLE = 8,
  QR_ERR_DIMENSION = 9,
  QR_ERR_RANK_DEFICIENT = 10,
  QR_ERR_ODD_ORDER = 11,
  QR_ERR_NOT_A_HOMOMORPHISM = 12,
  QR_ERR_DEGENERATE_DIMENSION = 13,
  QR_ERR_ILL_CONDITIONED_GRAM = 14,
  QR_ERR_PARSE = 15,
  QR_ERR_IO = 16,
  QR_ERR_INVALID_ARGUMENT = 17,
  QR_ERR_INTERNAL = 18
} qr_status;

/* Message of the last failing call on this thread; "" if none. */
QR_API const char* qr_last_error(void);
QR_API const char* qr_status_name(qr_status status);
/* Nonzero for statuses caused by bad input (specs, files, arguments). */
QR_API int qr_status_is_input_error(qr_status status);
QR_API const char* qr_version(void);

/* Every char** result is heap allocated; release it with qr_string_free. */
QR_API void qr_string_free(char* s);

/* Groups. `spec` is a family such as "alternating(5)" or "product(cyclic(2),symmetric(3))". */
QR_API qr_status qr_group_from_spec(const char* spec, qr_group** out);
QR_API qr_status qr_group_load(const char* path, qr_group** out);
/* Row-major n x n table. */
QR_API qr_status qr_group_from_table(size_t n, const uint32_t* table, const char* name, qr_group** out);
QR_API qr_status qr_group_save(const qr_group* g, const char* path);
QR_API void qr_group_free(qr_group* g);
QR_API size_t qr_group_order(const qr_group* g);
QR_API size_t qr_group_class_count(const qr_group* g);
QR_API qr_status qr_group_summary(const qr_group* g, int json, char** out);
/* Stores the group table in the cache directory unless already present. */
QR_API qr_status qr_group_cache_store(const qr_group* g, const char* cache_dir);

/* Irreps, from the cache at `cache_dir` when non-NULL (decomposed and stored
 * on a miss). `tolerance_scale` multiplies every numerical tolerance; pass 1. */
QR_API qr_status qr_irreps_compute(const qr_group* g, const char* cache_dir, uint64_t seed,
                                   double tolerance_scale, qr_irreps** out);
QR_API void qr_irreps_free(qr_irreps* t);
QR_API size_t qr_irreps_count(const qr_irreps* t);
QR_API size_t qr_irreps_dim(const qr_irreps* t, size_t i);
QR_API size_t qr_irreps_d_min(const qr_irreps* t);
QR_API qr_status qr_irreps_summary(const qr_irreps* t, int json, char** out);

typedef enum qr_construction { QR_MINOR = 0, QR_POLAR = 1 } qr_construction;

typedef struct qr_sweep_options {
  qr_construction construction;
  const size_t* irreps; /* table indices; NULL or count 0 for every nontrivial irrep */
  size_t irrep_count;
  size_t d_psi_min;
  size_t d_psi_max;
  size_t seeds;
  uint64_t seed;
  int random_subspace;
} qr_sweep_options;

/* CSV (json = 0) or JSON rows. */
QR_API qr_status qr_sweep(const qr_irreps* t, const qr_sweep_options* opts, int json, char** out);

typedef struct qr_hom_options {
  const char* generator; /* random, balanced_random, genuine_hom, perturbed_hom, identity */
  const char* images;    /* "g:h,g:h" generator images, may be NULL */
  double flip_fraction;
  size_t seeds;
  uint64_t seed;
} qr_hom_options;

QR_API qr_status qr_hom(const qr_irreps* source, const qr_irreps* target, const qr_hom_options* opts,
                        int json, char** out);

/* Exact twirl coefficients; with samples > 0 also the Monte Carlo estimate. */
QR_API qr_status qr_twirl(size_t d_rho, size_t d_psi, size_t samples, uint64_t seed, char** out);

QR_API qr_status qr_audit(const qr_irreps* t, size_t irrep, size_t d_psi, size_t samples, uint64_t seed,
                          char** out);

typedef struct qr_verify_options {
  int full;
  uint64_t seed;
  const char* cache_dir;        /* may be NULL */
  const char* negative_control; /* may be NULL */
  double tolerance_scale;
  size_t twirl_samples;
} qr_verify_options;

/* Manifest JSON in *out; *passed is 1 iff every criterion passed. When
 * `first_failure` is non-NULL it receives the first failing criterion ("" if none). */
QR_API qr_status qr_verify(const qr_verify_options* opts, char** out, int* passed, char** first_failure);

/* Runs one experiment described by a JSON object (see the README). The
 * result goes to the config's "out" path when set, otherwise to *out. */
QR_API qr_status qr_run_config(const char* json_text, const char* cache_dir, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QUASIREP_QUASIREP_H */
