/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef BANDFORMS_H_INCLUDED
#define BANDFORMS_H_INCLUDED

/* C interface to the bandforms engine.
 *
 * bandforms computes linking forms on double branched covers of knots
 * given as connected-sum expressions or PD diagram codes, decomposes
 * them into anisotropic and metabolic parts, and evaluates obstruction
 * and bound rules for the band-unknotting number and the non-orientable
 * 4-genus.
 *
 * All computation entry points take an opaque context holding the
 * enumeration cap and the knot record table, and return a heap string
 * (text or JSON) through an out parameter.  Strings must be released
 * with bandforms_str_free.  On failure the out string is left null and
 * a diagnostic is available from bandforms_ctx_last_error.
 */

#include <stddef.h>

#if defined _WIN32
#define BANDFORMS_API __declspec(dllexport)
#else
#define BANDFORMS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum bandforms_status {
  BANDFORMS_OK = 0,
  BANDFORMS_ERR_COMPUTE = 1, /* enumeration cap exceeded or internal consistency failure */
  BANDFORMS_ERR_INPUT = 2,   /* parse error, invalid parameter, bad record file */
  BANDFORMS_ERR_MISMATCH = 3 /* a worked-example check did not reproduce the expected verdict */
} bandforms_status;

typedef struct bandforms_ctx bandforms_ctx;

BANDFORMS_API bandforms_ctx *bandforms_ctx_new(void);
BANDFORMS_API void bandforms_ctx_free(bandforms_ctx *ctx);

/* Override the element-enumeration cap (default 10^6, minimum 10^3). */
BANDFORMS_API bandforms_status bandforms_ctx_set_cap(bandforms_ctx *ctx,
                                                     unsigned long long cap);

/* Replace the built-in knot record table with the one at `path`. */
BANDFORMS_API bandforms_status bandforms_ctx_load_records(bandforms_ctx *ctx,
                                                          const char *path);

/* Message describing the most recent failure on this context. */
BANDFORMS_API const char *bandforms_ctx_last_error(const bandforms_ctx *ctx);

/* Linking form of the double branched cover of a knot expression. */
BANDFORMS_API bandforms_status bandforms_form(bandforms_ctx *ctx,
                                              const char *expr, int as_json,
                                              char **out);

/* Witt decomposition and anisotropic generator count. */
BANDFORMS_API bandforms_status bandforms_witt(bandforms_ctx *ctx,
                                              const char *expr, int as_json,
                                              char **out);

/* Twisted-band (determinant/generator) obstruction verdict. */
BANDFORMS_API bandforms_status bandforms_obstruct(bandforms_ctx *ctx,
                                                  const char *expr,
                                                  int as_json, char **out);

/* Certified intervals for the band-unknotting number and both
 * non-orientable 4-genera, with per-rule provenance. */
BANDFORMS_API bandforms_status bandforms_bounds(bandforms_ctx *ctx,
                                                const char *expr, int as_json,
                                                char **out);

/* Goeritz matrix, determinant and linking form of a PD diagram code. */
BANDFORMS_API bandforms_status bandforms_goeritz(bandforms_ctx *ctx,
                                                 const char *pd_text,
                                                 int as_json, char **out);

/* Dual-route obstruction scan of the two-bridge sum family indexed by
 * a = 4, 10, 16, ... up to a_max. */
BANDFORMS_API bandforms_status bandforms_family5(bandforms_ctx *ctx,
                                                 long a_max, int as_json,
                                                 char **out);

/* Re-run all vendored worked examples; BANDFORMS_ERR_MISMATCH on any
 * deviation from the expected verdicts. */
BANDFORMS_API bandforms_status bandforms_paper_examples(bandforms_ctx *ctx,
                                                        int as_json,
                                                        char **out);

BANDFORMS_API void bandforms_str_free(char *s);

BANDFORMS_API const char *bandforms_version_string(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BANDFORMS_H_INCLUDED */
