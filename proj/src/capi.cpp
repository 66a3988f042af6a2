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

#include "bandforms.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "errors.hpp"
#include "family_checks.hpp"
#include "serialize.hpp"

using namespace bandforms;

struct bandforms_ctx {
  Limits limits;
  RecordTable records = RecordTable::builtin();
  std::string last_error;
};

namespace {

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bandforms_status fail(bandforms_ctx *ctx, const Error &err) {
  ctx->last_error = err.what();
  return static_cast<bandforms_status>(static_cast<int>(err.code()));
}

template <typename Fn>
bandforms_status run(bandforms_ctx *ctx, char **out, Fn &&fn) {
  if (!ctx) return BANDFORMS_ERR_INPUT;
  if (out) *out = nullptr;
  ctx->last_error.clear();
  try {
    std::string text = fn();
    if (out) {
      *out = dup_string(text);
      if (!*out) {
        ctx->last_error = "out of memory";
        return BANDFORMS_ERR_COMPUTE;
      }
    }
    return BANDFORMS_OK;
  } catch (const Error &err) {
    return fail(ctx, err);
  } catch (const std::exception &err) {
    ctx->last_error = err.what();
    return BANDFORMS_ERR_COMPUTE;
  }
}

std::string render(const json &j, int as_json, const std::string &text) {
  return as_json ? j.dump(2) + "\n" : text;
}

} // namespace

extern "C" {

BANDFORMS_API bandforms_ctx *bandforms_ctx_new(void) {
  try {
    return new bandforms_ctx();
  } catch (...) {
    return nullptr;
  }
}

BANDFORMS_API void bandforms_ctx_free(bandforms_ctx *ctx) { delete ctx; }

BANDFORMS_API bandforms_status bandforms_ctx_set_cap(bandforms_ctx *ctx,
                                                     unsigned long long cap) {
  if (!ctx) return BANDFORMS_ERR_INPUT;
  if (cap < 1000) {
    ctx->last_error = "enumeration cap must be at least 1000";
    return BANDFORMS_ERR_INPUT;
  }
  ctx->limits.enumeration_cap = cap;
  return BANDFORMS_OK;
}

BANDFORMS_API bandforms_status bandforms_ctx_load_records(bandforms_ctx *ctx,
                                                          const char *path) {
  return run(ctx, nullptr, [&]() -> std::string {
    if (!path) throw InputError("record path is null");
    ctx->records = RecordTable::load_file(path);
    return "";
  });
}

BANDFORMS_API const char *bandforms_ctx_last_error(const bandforms_ctx *ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

BANDFORMS_API bandforms_status bandforms_form(bandforms_ctx *ctx,
                                              const char *expr, int as_json,
                                              char **out) {
  return run(ctx, out, [&] {
    if (!expr) throw InputError("expression is null");
    LinkingForm f =
        double_cover_form(parse_expression(expr, ctx->records));
    return render(form_json(f), as_json, form_text(f));
  });
}

BANDFORMS_API bandforms_status bandforms_witt(bandforms_ctx *ctx,
                                              const char *expr, int as_json,
                                              char **out) {
  return run(ctx, out, [&] {
    if (!expr) throw InputError("expression is null");
    LinkingForm f =
        double_cover_form(parse_expression(expr, ctx->records));
    WittResult w = witt_decompose(f, ctx->limits);
    return render(witt_json(w), as_json, witt_text(w));
  });
}

BANDFORMS_API bandforms_status bandforms_obstruct(bandforms_ctx *ctx,
                                                  const char *expr,
                                                  int as_json, char **out) {
  return run(ctx, out, [&] {
    if (!expr) throw InputError("expression is null");
    LinkingForm f =
        double_cover_form(parse_expression(expr, ctx->records));
    ObstructionResult o = lickorish_test(f, ctx->limits);
    return render(obstruction_json(o), as_json, obstruction_text(o));
  });
}

BANDFORMS_API bandforms_status bandforms_bounds(bandforms_ctx *ctx,
                                                const char *expr, int as_json,
                                                char **out) {
  return run(ctx, out, [&] {
    if (!expr) throw InputError("expression is null");
    BoundsResult b =
        bounds(parse_expression(expr, ctx->records), ctx->limits);
    return render(bounds_json(b), as_json, bounds_text(b));
  });
}

BANDFORMS_API bandforms_status bandforms_goeritz(bandforms_ctx *ctx,
                                                 const char *pd_text,
                                                 int as_json, char **out) {
  return run(ctx, out, [&] {
    if (!pd_text) throw InputError("PD text is null");
    GoeritzReport rep = goeritz_report(pd_text);
    return render(goeritz_json(rep), as_json, goeritz_text(rep));
  });
}

BANDFORMS_API bandforms_status bandforms_family5(bandforms_ctx *ctx,
                                                 long a_max, int as_json,
                                                 char **out) {
  return run(ctx, out, [&] {
    auto cases = family_section5_scan(a_max, ctx->limits);
    for (const auto &c : cases)
      if (!c.pass)
        throw MismatchError("family case a = " + std::to_string(c.a) +
                            " did not reproduce the expected verdict");
    return render(family5_json(cases), as_json, family5_text(cases));
  });
}

BANDFORMS_API bandforms_status bandforms_paper_examples(bandforms_ctx *ctx,
                                                        int as_json,
                                                        char **out) {
  if (!ctx) return BANDFORMS_ERR_INPUT;
  if (out) *out = nullptr;
  ctx->last_error.clear();
  try {
    PaperExamplesReport rep = paper_examples(ctx->records, ctx->limits);
    std::string text =
        render(paper_examples_json(rep), as_json, paper_examples_text(rep));
    if (out) {
      *out = dup_string(text);
      if (!*out) {
        ctx->last_error = "out of memory";
        return BANDFORMS_ERR_COMPUTE;
      }
    }
    if (rep.pass) return BANDFORMS_OK;
    ctx->last_error = rep.cap_trouble
                          ? "worked-example checks hit the enumeration cap"
                          : "worked-example checks failed";
    return rep.cap_trouble ? BANDFORMS_ERR_COMPUTE : BANDFORMS_ERR_MISMATCH;
  } catch (const Error &err) {
    return fail(ctx, err);
  } catch (const std::exception &err) {
    ctx->last_error = err.what();
    return BANDFORMS_ERR_COMPUTE;
  }
}

BANDFORMS_API void bandforms_str_free(char *s) { std::free(s); }

BANDFORMS_API const char *bandforms_version_string(void) { return "0.1.0"; }

} // extern "C"
