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

// Command-line front end.  Everything runs through the shared library's C
// interface; this translation unit never touches the C++ core directly.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>

#include "bandforms.h"

namespace {

struct CtxDeleter {
  void operator()(bandforms_ctx *c) const { bandforms_ctx_free(c); }
};

int finish(bandforms_ctx *ctx, bandforms_status status, char *out) {
  if (out) {
    std::fputs(out, stdout);
    bandforms_str_free(out);
  }
  if (status != BANDFORMS_OK)
    std::fprintf(stderr, "bandforms: error: %s\n",
                 bandforms_ctx_last_error(ctx));
  return static_cast<int>(status);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"linking forms, Witt decompositions and band-unknotting "
               "bounds for connected sums of knots"};
  app.require_subcommand(1);

  bool as_json = false;
  unsigned long long cap = 0;
  std::string records_path;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--cap", cap,
                 "element-enumeration cap (default 1000000, minimum 1000)");
  app.add_option("--records", records_path,
                 "knot record table replacing the built-in one");

  std::string expr, pd_text;
  long a_max = 58;

  auto *cmd_form = app.add_subcommand(
      "form", "linking form of the double branched cover");
  cmd_form->add_option("expression", expr, "knot expression")->required();
  auto *cmd_witt = app.add_subcommand(
      "witt", "Witt decomposition and anisotropic generator count");
  cmd_witt->add_option("expression", expr, "knot expression")->required();
  auto *cmd_obstruct = app.add_subcommand(
      "obstruct", "single-band unknotting obstruction");
  cmd_obstruct->add_option("expression", expr, "knot expression")->required();
  auto *cmd_bounds = app.add_subcommand(
      "bounds", "certified intervals for u_nb and the non-orientable 4-genus");
  cmd_bounds->add_option("expression", expr, "knot expression")->required();
  auto *cmd_goeritz = app.add_subcommand(
      "goeritz", "Goeritz matrix, determinant and form of a PD code");
  cmd_goeritz->add_option("pd", pd_text, "PD code, e.g. "
                          "\"X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\"")
      ->required();
  auto *cmd_family5 = app.add_subcommand(
      "family5", "dual-route obstruction scan of the lens-sum family");
  cmd_family5->add_option("--a-max", a_max, "largest family parameter a");
  auto *cmd_paper = app.add_subcommand(
      "paper-examples", "re-run all vendored worked examples");

  CLI11_PARSE(app, argc, argv);

  std::unique_ptr<bandforms_ctx, CtxDeleter> ctx(bandforms_ctx_new());
  if (!ctx) {
    std::fprintf(stderr, "bandforms: cannot allocate context\n");
    return static_cast<int>(BANDFORMS_ERR_COMPUTE);
  }
  if (cap != 0) {
    bandforms_status s = bandforms_ctx_set_cap(ctx.get(), cap);
    if (s != BANDFORMS_OK) return finish(ctx.get(), s, nullptr);
  }
  if (!records_path.empty()) {
    bandforms_status s =
        bandforms_ctx_load_records(ctx.get(), records_path.c_str());
    if (s != BANDFORMS_OK) return finish(ctx.get(), s, nullptr);
  }

  char *out = nullptr;
  bandforms_status status = BANDFORMS_OK;
  int json_flag = as_json ? 1 : 0;
  if (cmd_form->parsed())
    status = bandforms_form(ctx.get(), expr.c_str(), json_flag, &out);
  else if (cmd_witt->parsed())
    status = bandforms_witt(ctx.get(), expr.c_str(), json_flag, &out);
  else if (cmd_obstruct->parsed())
    status = bandforms_obstruct(ctx.get(), expr.c_str(), json_flag, &out);
  else if (cmd_bounds->parsed())
    status = bandforms_bounds(ctx.get(), expr.c_str(), json_flag, &out);
  else if (cmd_goeritz->parsed())
    status = bandforms_goeritz(ctx.get(), pd_text.c_str(), json_flag, &out);
  else if (cmd_family5->parsed())
    status = bandforms_family5(ctx.get(), a_max, json_flag, &out);
  else if (cmd_paper->parsed())
    status = bandforms_paper_examples(ctx.get(), json_flag, &out);

  return finish(ctx.get(), status, out);
}
